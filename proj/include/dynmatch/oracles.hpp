#ifndef DYNMATCH_ORACLES_HPP_
#define DYNMATCH_ORACLES_HPP_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dynmatch/dynamic_graph.hpp"
#include "dynmatch/types.hpp"

namespace dynmatch {

/// Exhaustive solvers for verification only. A graph is admitted if its
/// non-isolated vertex count is within max_vertices (subset dynamic program)
/// or, for the matching oracles, its edge count is within max_edges
/// (include/exclude branching).
struct OracleLimits {
    std::size_t max_edges = 32;
    std::size_t max_vertices = 16;
};

namespace detail {

// Largest vertex count the subset tables are allowed to cover.
inline constexpr std::size_t kMaxSubsetVertices = 20;

struct DenseGraph {
    int n = 0;
    std::vector<std::uint32_t> adj;
    std::vector<std::vector<Weight>> w;
    std::vector<std::pair<int, int>> edges;
    std::vector<Weight> edge_w;
};

inline DenseGraph densify(const AdjacencyGraph& g, bool keep_weights) {
    DenseGraph d;
    std::map<Vertex, int> ids;
    for (Vertex v : g.vertices()) ids.emplace(v, static_cast<int>(ids.size()));
    d.n = static_cast<int>(ids.size());
    const bool dense = d.n <= 32;
    if (dense) {
        d.adj.assign(d.n, 0);
        d.w.assign(d.n, std::vector<Weight>(d.n, 0));
    }
    for (const auto& [u, unused] : ids) {
        for (const auto& [v, wt] : g.neighbors(u)) {
            if (v < u) continue;
            const int a = ids.at(u);
            const int b = ids.at(v);
            const Weight ew = keep_weights ? wt : 1;
            d.edges.emplace_back(a, b);
            d.edge_w.push_back(ew);
            if (dense) {
                d.adj[a] |= 1u << b;
                d.adj[b] |= 1u << a;
                d.w[a][b] = d.w[b][a] = ew;
            }
        }
    }
    return d;
}

class SubsetMatchingSolver {
public:
    explicit SubsetMatchingSolver(const DenseGraph& d)
        : d_(d), memo_(std::size_t{1} << d.n, -1) {}

    Weight solve() { return best((1u << d_.n) - 1); }

private:
    // Best matching weight within the vertex subset `mask`.
    Weight best(std::uint32_t mask) {
        if (mask == 0) return 0;
        Weight& slot = memo_[mask];
        if (slot >= 0) return slot;
        const int v = std::countr_zero(mask);
        const std::uint32_t rest = mask & (mask - 1);
        Weight result = best(rest);
        for (std::uint32_t nb = d_.adj[v] & rest; nb != 0; nb &= nb - 1) {
            const int u = std::countr_zero(nb);
            result = std::max(result, d_.w[v][u] + best(rest & ~(1u << u)));
        }
        memo_[mask] = result;
        return result;
    }

    const DenseGraph& d_;
    std::vector<Weight> memo_;
};

class EdgeBranchSolver {
public:
    explicit EdgeBranchSolver(const DenseGraph& d) : d_(d), suffix_(d.edges.size() + 1, 0) {
        for (std::size_t i = d.edges.size(); i-- > 0;) suffix_[i] = suffix_[i + 1] + d.edge_w[i];
    }

    Weight solve() {
        branch(0, 0, 0);
        return best_;
    }

private:
    void branch(std::size_t i, std::uint64_t used, Weight acc) {
        best_ = std::max(best_, acc);
        if (i == d_.edges.size() || acc + suffix_[i] <= best_) return;
        const auto [a, b] = d_.edges[i];
        const std::uint64_t bits = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
        if ((used & bits) == 0) branch(i + 1, used | bits, acc + d_.edge_w[i]);
        branch(i + 1, used, acc);
    }

    const DenseGraph& d_;
    std::vector<Weight> suffix_;
    Weight best_ = 0;
};

inline Weight exact_matching_value(const AdjacencyGraph& g, bool weighted, const OracleLimits& limits) {
    if (g.vertex_count() <= std::min<std::size_t>(limits.max_vertices, kMaxSubsetVertices)) {
        const DenseGraph d = densify(g, weighted);
        return SubsetMatchingSolver(d).solve();
    }
    if (g.edge_count() <= std::min<std::size_t>(limits.max_edges, 32)) {
        const DenseGraph d = densify(g, weighted);
        return EdgeBranchSolver(d).solve();
    }
    throw Error(ErrorCode::OracleLimitExceeded,
                std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) + " edges");
}

}  // namespace detail

/// Maximum matching size by exhaustive search.
inline std::size_t exact_mcm_oracle(const AdjacencyGraph& g, const OracleLimits& limits = {}) {
    return static_cast<std::size_t>(detail::exact_matching_value(g, false, limits));
}

/// Maximum matching weight by exhaustive search.
inline Weight exact_mwm_oracle(const AdjacencyGraph& g, const OracleLimits& limits = {}) {
    return detail::exact_matching_value(g, true, limits);
}

/// Minimum vertex cover size by branching on a maximum-degree vertex: either
/// it joins the cover or all of its neighbors do.
inline std::size_t exact_min_vc_oracle(const AdjacencyGraph& g, const OracleLimits& limits = {}) {
    if (g.vertex_count() > std::min<std::size_t>(limits.max_vertices, detail::kMaxSubsetVertices)) {
        throw Error(ErrorCode::OracleLimitExceeded, std::to_string(g.vertex_count()) + " vertices");
    }
    const detail::DenseGraph d = detail::densify(g, false);
    std::vector<int> memo(std::size_t{1} << d.n, -1);
    auto solve = [&](auto&& self, std::uint32_t open) -> int {
        int& slot = memo[open];
        if (slot >= 0) return slot;
        int pick = -1;
        int pick_deg = 0;
        for (std::uint32_t s = open; s != 0; s &= s - 1) {
            const int v = std::countr_zero(s);
            const int deg = std::popcount(d.adj[v] & open);
            if (deg > pick_deg) {
                pick = v;
                pick_deg = deg;
            }
        }
        int result = 0;
        if (pick >= 0) {
            const std::uint32_t without = open & ~(1u << pick);
            const std::uint32_t nb = d.adj[pick] & open;
            result = std::min(1 + self(self, without), pick_deg + self(self, without & ~nb));
        }
        memo[open] = result;
        return result;
    };
    return static_cast<std::size_t>(solve(solve, d.n == 0 ? 0u : (1u << d.n) - 1));
}

}  // namespace dynmatch

#endif  // DYNMATCH_ORACLES_HPP_
