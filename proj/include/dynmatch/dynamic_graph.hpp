#ifndef DYNMATCH_DYNAMIC_GRAPH_HPP_
#define DYNMATCH_DYNAMIC_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "dynmatch/types.hpp"

namespace dynmatch {

using VertexSet = std::set<Vertex>;

enum class UpdateKind { Insert, Delete };

struct UpdateEvent {
    UpdateKind kind = UpdateKind::Insert;
    Edge edge;
    std::uint64_t seq = 0;

    bool is_insert() const noexcept { return kind == UpdateKind::Insert; }
    bool is_delete() const noexcept { return kind == UpdateKind::Delete; }
};

inline UpdateEvent make_insert(Vertex a, Vertex b, Weight w = 1, std::uint64_t seq = 0) {
    return {UpdateKind::Insert, Edge(a, b, w), seq};
}

inline UpdateEvent make_delete(Vertex a, Vertex b, std::uint64_t seq = 0) {
    return {UpdateKind::Delete, Edge(a, b), seq};
}

/// How top_weight_neighbors ranks candidates. ById is the deterministic
/// stand-in for an arbitrary choice in unweighted mode.
enum class NeighborOrder { ByWeight, ById };

/// Undirected simple graph with per-vertex adjacency in two orders: by
/// neighbor id and by (weight desc, id asc). Vertices exist only while they
/// have at least one incident edge.
class AdjacencyGraph {
    struct HeavierFirst {
        bool operator()(const std::pair<Weight, Vertex>& a,
                        const std::pair<Weight, Vertex>& b) const noexcept {
            if (a.first != b.first) return a.first > b.first;
            return a.second < b.second;
        }
    };

public:
    struct Adjacency {
        std::map<Vertex, Weight> by_id;
        std::set<std::pair<Weight, Vertex>, HeavierFirst> by_weight;
    };

    std::size_t edge_count() const noexcept { return m_; }
    std::size_t vertex_count() const noexcept { return adj_.size(); }
    bool empty() const noexcept { return m_ == 0; }

    bool has_edge(Vertex a, Vertex b) const {
        return weight(a, b).has_value();
    }

    std::optional<Weight> weight(Vertex a, Vertex b) const {
        ++reads_;
        auto it = adj_.find(a);
        if (it == adj_.end()) return std::nullopt;
        auto jt = it->second.by_id.find(b);
        if (jt == it->second.by_id.end()) return std::nullopt;
        return jt->second;
    }

    std::size_t degree(Vertex u) const {
        auto it = adj_.find(u);
        return it == adj_.end() ? 0 : it->second.by_id.size();
    }

    /// Neighbor map of u (empty if u is isolated). Not instrumented; callers
    /// that walk it account for their own steps.
    const std::map<Vertex, Weight>& neighbors(Vertex u) const {
        static const std::map<Vertex, Weight> kNone;
        auto it = adj_.find(u);
        return it == adj_.end() ? kNone : it->second.by_id;
    }

    const Adjacency* adjacency(Vertex u) const {
        auto it = adj_.find(u);
        return it == adj_.end() ? nullptr : &it->second;
    }

    /// Non-isolated vertices in increasing id order.
    std::vector<Vertex> vertices() const {
        std::vector<Vertex> out;
        out.reserve(adj_.size());
        for (const auto& [v, a] : adj_) out.push_back(v);
        return out;
    }

    /// Calls f(edge) for every edge in canonical (u, then v) order.
    template <class F>
    void for_each_edge(F&& f) const {
        for (const auto& [u, a] : adj_) {
            for (auto it = a.by_id.upper_bound(u); it != a.by_id.end(); ++it) {
                ++reads_;
                f(Edge(u, it->first, it->second));
            }
        }
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(m_);
        for_each_edge([&](const Edge& e) { out.push_back(e); });
        return out;
    }

    Weight max_weight() const {
        Weight best = 0;
        for (const auto& [u, a] : adj_) {
            if (!a.by_weight.empty()) best = std::max(best, a.by_weight.begin()->first);
        }
        return best;
    }

    /// Up to k incident edges of u whose other endpoint is not in `excluded`,
    /// heaviest first with ties broken by smaller neighbor id (ByWeight), or
    /// the k smallest-id eligible neighbors (ById).
    std::vector<Edge> top_weight_neighbors(Vertex u, std::size_t k, const VertexSet& excluded,
                                           NeighborOrder order = NeighborOrder::ByWeight) const {
        std::vector<Edge> out;
        auto it = adj_.find(u);
        if (it == adj_.end() || k == 0) return out;
        auto take = [&](Vertex x, Weight w) {
            ++reads_;
            if (excluded.count(x) == 0) out.emplace_back(u, x, w);
            return out.size() < k;
        };
        if (order == NeighborOrder::ByWeight) {
            for (const auto& [w, x] : it->second.by_weight) {
                if (!take(x, w)) break;
            }
        } else {
            for (const auto& [x, w] : it->second.by_id) {
                if (!take(x, w)) break;
            }
        }
        return out;
    }

    /// Adjacency entries visited through the instrumented query surface.
    std::uint64_t reads() const noexcept { return reads_; }
    void reset_reads() const noexcept { reads_ = 0; }
    /// Records one read made by a caller walking adjacency() directly.
    void note_read() const noexcept { ++reads_; }

    friend bool operator==(const AdjacencyGraph& a, const AdjacencyGraph& b) {
        if (a.m_ != b.m_ || a.adj_.size() != b.adj_.size()) return false;
        auto it = b.adj_.begin();
        for (const auto& [u, adj] : a.adj_) {
            if (u != it->first || adj.by_id != it->second.by_id) return false;
            ++it;
        }
        return true;
    }

protected:
    void add_edge(const Edge& e) {
        auto& au = adj_[e.u];
        auto& av = adj_[e.v];
        au.by_id.emplace(e.v, e.w);
        au.by_weight.emplace(e.w, e.v);
        av.by_id.emplace(e.u, e.w);
        av.by_weight.emplace(e.w, e.u);
        ++m_;
    }

    void remove_edge(Vertex u, Vertex v, Weight w) {
        drop_half(u, v, w);
        drop_half(v, u, w);
        --m_;
    }

private:
    void drop_half(Vertex u, Vertex v, Weight w) {
        auto it = adj_.find(u);
        it->second.by_id.erase(v);
        it->second.by_weight.erase({w, v});
        if (it->second.by_id.empty()) adj_.erase(it);
    }

    std::map<Vertex, Adjacency> adj_;
    std::size_t m_ = 0;
    mutable std::uint64_t reads_ = 0;
};

/// Read-only graph built once from an edge list (core subgraphs, test inputs).
class StaticGraph : public AdjacencyGraph {
public:
    StaticGraph() = default;
    explicit StaticGraph(const std::vector<Edge>& edges) {
        for (const auto& e : edges) insert(e);
    }

    /// Adds e unless already present; returns whether it was added.
    bool insert(const Edge& e) {
        if (has_edge(e.u, e.v)) return false;
        add_edge(e);
        return true;
    }
};

/// Frozen copy of a graph at a given version. Cheap to copy (shared).
class GraphSnapshot {
public:
    GraphSnapshot() : graph_(std::make_shared<const StaticGraph>()) {}
    GraphSnapshot(std::shared_ptr<const StaticGraph> g, std::uint64_t version)
        : graph_(std::move(g)), version_(version) {}

    const StaticGraph& graph() const noexcept { return *graph_; }
    const StaticGraph* operator->() const noexcept { return graph_.get(); }
    std::uint64_t version() const noexcept { return version_; }

private:
    std::shared_ptr<const StaticGraph> graph_;
    std::uint64_t version_ = 0;
};

struct GraphOptions {
    /// Upper weight bound N; inserts with w outside [1, n_cap] are rejected.
    Weight n_cap = 1;
};

class DynamicGraph : public AdjacencyGraph {
public:
    DynamicGraph() = default;
    explicit DynamicGraph(GraphOptions options) : options_(options) {}

    const GraphOptions& options() const noexcept { return options_; }
    std::uint64_t version() const noexcept { return version_; }

    /// Applies one update. For deletions the stored weight is written back
    /// into ev.edge.w so downstream consumers see the removed edge's weight.
    void apply_update(UpdateEvent& ev) {
        const Edge& e = ev.edge;
        if (ev.is_insert()) {
            if (e.w < 1 || e.w > options_.n_cap) {
                throw Error(ErrorCode::WeightOutOfRange,
                            to_string(e) + " outside [1, " + std::to_string(options_.n_cap) + "]");
            }
            if (has_edge(e.u, e.v)) throw Error(ErrorCode::DuplicateInsert, to_string(e));
            add_edge(e);
        } else {
            auto w = weight(e.u, e.v);
            if (!w) throw Error(ErrorCode::MissingDelete, to_string(e));
            ev.edge.w = *w;
            remove_edge(e.u, e.v, *w);
        }
        ++version_;
    }

    void apply_update(const UpdateEvent& ev) {
        UpdateEvent copy = ev;
        apply_update(copy);
    }

    GraphSnapshot snapshot() const {
        auto copy = std::make_shared<StaticGraph>();
        for_each_edge([&](const Edge& e) { copy->insert(e); });
        return GraphSnapshot(std::move(copy), version_);
    }

private:
    GraphOptions options_;
    std::uint64_t version_ = 0;
};

}  // namespace dynmatch

#endif  // DYNMATCH_DYNAMIC_GRAPH_HPP_
