#ifndef DYNMATCH_STATIC_MATCH_HPP_
#define DYNMATCH_STATIC_MATCH_HPP_

#include <cstddef>
#include <map>
#include <vector>

#include "dynmatch/blossom.hpp"
#include "dynmatch/dynamic_graph.hpp"
#include "dynmatch/matching.hpp"
#include "dynmatch/step_task.hpp"
#include "dynmatch/types.hpp"

namespace dynmatch {

/// Maximal matching plus the vertex cover formed by its endpoints.
struct CoverResult {
    VertexSet cover;
    Matching witness;
};

namespace detail {

inline void check_tolerance(double eps) {
    if (!(eps >= 0.0)) throw Error(ErrorCode::InvalidParams, "tolerance must be >= 0");
}

// Shared body of the approximate matchers. `unit` replaces every weight by 1
// inside the solver; returned edges keep their true weights.
inline StepTask<Matching> blossom_task(const AdjacencyGraph& g, double eps, bool unit) {
    check_tolerance(eps);
    const std::vector<Edge> edges = g.edges();
    std::map<Vertex, int> local;
    std::vector<BlossomSolver::LocalEdge> input;
    input.reserve(edges.size());
    for (const Edge& e : edges) {
        co_yield kStep;
        const int i = local.emplace(e.u, static_cast<int>(local.size())).first->second;
        const int j = local.emplace(e.v, static_cast<int>(local.size())).first->second;
        input.push_back({i, j, unit ? Weight{1} : e.w});
    }
    BlossomSolver solver(static_cast<int>(local.size()), std::move(input));
    co_await solver.solve(eps);
    Matching out;
    for (int k : solver.matched_edges()) out.add(edges[k]);
    co_return out;
}

}  // namespace detail

/// Resumable form of approx_mcm. `g` must outlive the task.
inline StepTask<Matching> approx_mcm_task(const AdjacencyGraph& g, double eps) {
    return detail::blossom_task(g, eps, true);
}

/// Resumable form of approx_mwm. `g` must outlive the task.
inline StepTask<Matching> approx_mwm_task(const AdjacencyGraph& g, double eps) {
    return detail::blossom_task(g, eps, false);
}

/// Matching M with (1 + eps) * |M| >= maximum matching size. eps = 0 is exact.
inline Matching approx_mcm(const AdjacencyGraph& g, double eps) {
    return approx_mcm_task(g, eps).get();
}

/// Matching M with (1 + eps) * w(M) >= maximum matching weight. eps = 0 is exact.
inline Matching approx_mwm(const AdjacencyGraph& g, double eps) {
    return approx_mwm_task(g, eps).get();
}

/// Greedy maximal matching over edges in canonical order.
inline StepTask<Matching> maximal_matching_task(const AdjacencyGraph& g) {
    const std::vector<Edge> edges = g.edges();
    Matching out;
    for (const Edge& e : edges) {
        co_yield kStep;
        out.add(e);
    }
    co_return out;
}

inline Matching maximal_matching(const AdjacencyGraph& g) {
    return maximal_matching_task(g).get();
}

inline CoverResult cover_from_matching(Matching witness) {
    CoverResult out;
    for (const Edge& e : witness) {
        out.cover.insert(e.u);
        out.cover.insert(e.v);
    }
    out.witness = std::move(witness);
    return out;
}

/// Endpoints of the greedy maximal matching: a 2-approximate vertex cover.
inline StepTask<CoverResult> approx_cover_task(const AdjacencyGraph& g) {
    auto inner = maximal_matching_task(g);
    Matching witness = co_await std::move(inner);
    co_return cover_from_matching(std::move(witness));
}

inline CoverResult approx_cover(const AdjacencyGraph& g) {
    return approx_cover_task(g).get();
}

/// Every edge of g has an endpoint in cover.
inline bool is_vertex_cover(const AdjacencyGraph& g, const VertexSet& cover) {
    bool ok = true;
    g.for_each_edge([&](const Edge& e) {
        if (cover.count(e.u) == 0 && cover.count(e.v) == 0) ok = false;
    });
    return ok;
}

}  // namespace dynmatch

#endif  // DYNMATCH_STATIC_MATCH_HPP_
