#ifndef DYNMATCH_MATCHING_HPP_
#define DYNMATCH_MATCHING_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "dynmatch/dynamic_graph.hpp"
#include "dynmatch/types.hpp"

namespace dynmatch {

/// A set of vertex-disjoint edges with cached cardinality and total weight.
class Matching {
public:
    Matching() = default;

    /// Builds from edges, throwing InvalidLevelMatching if two share a vertex.
    static Matching from_edges(const std::vector<Edge>& edges) {
        Matching m;
        for (const auto& e : edges) {
            if (!m.add(e)) {
                throw Error(ErrorCode::InvalidLevelMatching, "edge " + to_string(e) + " conflicts");
            }
        }
        return m;
    }

    std::size_t size() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return edges_.empty(); }
    Weight weight() const noexcept { return weight_; }

    bool is_matched(Vertex v) const { return mate_.count(v) != 0; }

    std::optional<Vertex> mate(Vertex v) const {
        auto it = mate_.find(v);
        if (it == mate_.end()) return std::nullopt;
        return it->second;
    }

    bool contains(const Edge& e) const { return edges_.count(e) != 0; }

    /// Adds e if both endpoints are free. Returns false (and leaves the
    /// matching untouched) otherwise.
    bool add(const Edge& e) {
        if (is_matched(e.u) || is_matched(e.v)) return false;
        edges_.insert(e);
        mate_[e.u] = e.v;
        mate_[e.v] = e.u;
        weight_ += e.w;
        return true;
    }

    /// Removes the edge with e's endpoints if present.
    bool remove(const Edge& e) {
        auto it = edges_.find(e);
        if (it == edges_.end()) return false;
        weight_ -= it->w;
        mate_.erase(it->u);
        mate_.erase(it->v);
        edges_.erase(it);
        return true;
    }

    const std::set<Edge>& edges() const noexcept { return edges_; }
    auto begin() const noexcept { return edges_.begin(); }
    auto end() const noexcept { return edges_.end(); }

    /// Every edge present in g with the same weight.
    bool valid_in(const AdjacencyGraph& g) const {
        for (const auto& e : edges_) {
            auto w = g.weight(e.u, e.v);
            if (!w || *w != e.w) return false;
        }
        return true;
    }

    /// No edge of g has both endpoints unmatched.
    bool maximal_in(const AdjacencyGraph& g) const {
        bool ok = true;
        g.for_each_edge([&](const Edge& e) {
            if (!is_matched(e.u) && !is_matched(e.v)) ok = false;
        });
        return ok;
    }

    friend bool operator==(const Matching& a, const Matching& b) {
        if (a.edges_.size() != b.edges_.size() || a.weight_ != b.weight_) return false;
        auto it = b.edges_.begin();
        for (const auto& e : a.edges_) {
            if (!(e == *it) || e.w != it->w) return false;
            ++it;
        }
        return true;
    }

private:
    std::set<Edge> edges_;
    std::map<Vertex, Vertex> mate_;
    Weight weight_ = 0;
};

}  // namespace dynmatch

#endif  // DYNMATCH_MATCHING_HPP_
