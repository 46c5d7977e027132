#ifndef DYNMATCH_COVER_MAINTAINER_HPP_
#define DYNMATCH_COVER_MAINTAINER_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>

#include "dynmatch/core_subgraph.hpp"
#include "dynmatch/dynamic_graph.hpp"
#include "dynmatch/matching.hpp"
#include "dynmatch/static_match.hpp"

namespace dynmatch {

/// Lazily refreshed vertex cover. Between refreshes the cover only grows by
/// insertion endpoints, so it stays valid; a refresh replaces it with the
/// endpoints of a maximal matching computed on the core subgraph.
///
/// Invariant: cover() is a vertex cover of the graph the updates were
/// applied to, and has at most 5 times the minimum size.
class CoverState {
public:
    const VertexSet& cover() const noexcept { return cover_; }
    const Matching& base_matching() const noexcept { return base_; }
    std::int64_t counter() const noexcept { return counter_; }
    std::uint64_t refresh_version() const noexcept { return refresh_version_; }
    std::size_t refresh_count() const noexcept { return refreshes_; }
    bool due() const noexcept { return counter_ <= 0; }

    /// Accounts for one applied update: insertion endpoints join the cover.
    void note_update(const UpdateEvent& ev) {
        if (ev.is_insert()) {
            cover_.insert(ev.edge.u);
            cover_.insert(ev.edge.v);
        }
        --counter_;
    }

    void add(Vertex v) { cover_.insert(v); }

    /// Installs a freshly computed cover and restarts the window.
    void adopt(CoverResult fresh, std::uint64_t version) {
        cover_ = std::move(fresh.cover);
        base_ = std::move(fresh.witness);
        counter_ = std::max<std::int64_t>(1, static_cast<std::int64_t>(base_.size() / 4));
        refresh_version_ = version;
        ++refreshes_;
    }

    /// Recomputes the cover from the core subgraph of g.
    void refresh(const AdjacencyGraph& g, std::uint64_t version) {
        const CoreSubgraph core = build_core(g, cover_, CoreOptions{}, version);
        adopt(approx_cover(core.graph), version);
    }

    bool refresh_if_due(const DynamicGraph& g) {
        if (!due()) return false;
        refresh(g, g.version());
        return true;
    }

private:
    VertexSet cover_;
    Matching base_;
    std::int64_t counter_ = 1;
    std::uint64_t refresh_version_ = 0;
    std::size_t refreshes_ = 0;
};

/// Standalone maintenance step for an update already applied to g.
inline void cover_on_update(CoverState& st, const DynamicGraph& g, const UpdateEvent& ev) {
    st.note_update(ev);
    st.refresh_if_due(g);
}

inline const VertexSet& current_cover(const CoverState& st) { return st.cover(); }

}  // namespace dynmatch

#endif  // DYNMATCH_COVER_MAINTAINER_HPP_
