#ifndef DYNMATCH_CORE_SUBGRAPH_HPP_
#define DYNMATCH_CORE_SUBGRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dynmatch/dynamic_graph.hpp"
#include "dynmatch/static_match.hpp"
#include "dynmatch/step_task.hpp"
#include "dynmatch/types.hpp"

namespace dynmatch {

/// Sparse subgraph that keeps every edge inside the cover plus, for each
/// cover vertex, its |cover| + 1 best edges leaving the cover. Any maximum
/// (weight) matching of the source graph has a counterpart of equal value
/// inside it.
struct CoreSubgraph {
    StaticGraph graph;
    VertexSet cover;
    std::uint64_t source_version = 0;
};

struct CoreOptions {
    /// Rank outgoing edges by weight; otherwise by neighbor id.
    bool weighted = false;
    /// Verify the cover against every edge of the source first.
    bool checked = false;
};

/// Bound on the edges of a core built from a cover of size c.
inline std::size_t core_edge_bound(std::size_t c) { return c * (2 * c + 1); }

/// Resumable core construction; one step per adjacency read. `g` must
/// outlive the task.
inline StepTask<CoreSubgraph> build_core_task(const AdjacencyGraph& g, VertexSet cover, CoreOptions options,
                                              std::uint64_t source_version = 0) {
    if (options.checked && !is_vertex_cover(g, cover)) {
        throw Error(ErrorCode::InvalidCover, "cover misses an edge");
    }
    CoreSubgraph core;
    core.cover = std::move(cover);
    core.source_version = source_version;
    const std::vector<Vertex> members(core.cover.begin(), core.cover.end());
    for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) {
            co_yield kStep;
            if (auto w = g.weight(members[a], members[b])) core.graph.insert(Edge(members[a], members[b], *w));
        }
    }
    const std::size_t quota = members.size() + 1;
    for (Vertex u : members) {
        const auto* adj = g.adjacency(u);
        if (adj == nullptr) continue;
        std::size_t taken = 0;
        if (options.weighted) {
            for (auto it = adj->by_weight.begin(); it != adj->by_weight.end() && taken < quota; ++it) {
                co_yield kStep;
                g.note_read();
                if (core.cover.count(it->second) != 0) continue;
                core.graph.insert(Edge(u, it->second, it->first));
                ++taken;
            }
        } else {
            for (auto it = adj->by_id.begin(); it != adj->by_id.end() && taken < quota; ++it) {
                co_yield kStep;
                g.note_read();
                if (core.cover.count(it->first) != 0) continue;
                core.graph.insert(Edge(u, it->first, it->second));
                ++taken;
            }
        }
    }
    co_return core;
}

/// Builds the core subgraph of g for `cover`. Throws InvalidCover in checked
/// mode if cover is not a vertex cover of g.
inline CoreSubgraph build_core(const AdjacencyGraph& g, const VertexSet& cover, CoreOptions options = {},
                               std::uint64_t source_version = 0) {
    return build_core_task(g, cover, options, source_version).get();
}

inline CoreSubgraph build_core(const DynamicGraph& g, const VertexSet& cover, CoreOptions options = {}) {
    return build_core(static_cast<const AdjacencyGraph&>(g), cover, options, g.version());
}

}  // namespace dynmatch

#endif  // DYNMATCH_CORE_SUBGRAPH_HPP_
