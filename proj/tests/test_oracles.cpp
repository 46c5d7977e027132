#include <random>

#include <gtest/gtest.h>

#include "dynmatch/oracles.hpp"
#include "test_util.hpp"

using namespace dynmatch;

namespace {

// Independent check: the smallest vertex subset touching every edge, by
// enumerating subsets in increasing size.
std::size_t brute_vc(const StaticGraph& g) {
    const auto verts = g.vertices();
    const auto edges = g.edges();
    const std::size_t n = verts.size();
    std::size_t best = n;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
        if (size >= best) continue;
        VertexSet chosen;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1u << i)) chosen.insert(verts[i]);
        }
        bool ok = true;
        for (const auto& e : edges) ok = ok && (chosen.count(e.u) || chosen.count(e.v));
        if (ok) best = size;
    }
    return best;
}

}  // namespace

TEST(ExactMcmOracle, SmallCases) {
    EXPECT_EQ(exact_mcm_oracle(StaticGraph({Edge(1, 2), Edge(2, 3), Edge(1, 3)})), 1u);
    EXPECT_EQ(exact_mcm_oracle(StaticGraph({Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(1, 4)})), 2u);
    EXPECT_EQ(exact_mcm_oracle(StaticGraph()), 0u);
}

TEST(ExactMwmOracle, SmallCases) {
    EXPECT_EQ(exact_mwm_oracle(StaticGraph({Edge(1, 2, 3), Edge(2, 3, 4), Edge(3, 4, 3)})), 6);
    EXPECT_EQ(exact_mwm_oracle(StaticGraph({Edge(1, 2, 9)})), 9);
    EXPECT_EQ(exact_mwm_oracle(StaticGraph({Edge(1, 2, 1), Edge(2, 3, 1), Edge(1, 3, 5)})), 5);
}

TEST(ExactMinVcOracle, SmallCases) {
    EXPECT_EQ(exact_min_vc_oracle(StaticGraph({Edge(1, 2), Edge(2, 3), Edge(1, 3)})), 2u);
    std::vector<Edge> star;
    for (Vertex leaf = 1; leaf <= 5; ++leaf) star.emplace_back(0, leaf);
    EXPECT_EQ(exact_min_vc_oracle(StaticGraph(star)), 1u);
    EXPECT_EQ(exact_min_vc_oracle(StaticGraph()), 0u);
}

TEST(Oracles, LimitsAreEnforced) {
    std::mt19937_64 rng(3);
    const StaticGraph big = testutil::random_graph(rng, 30, 0.5);
    try {
        (void)exact_mcm_oracle(big);
        FAIL() << "expected OracleLimitExceeded";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::OracleLimitExceeded);
    }
    EXPECT_THROW((void)exact_min_vc_oracle(big), Error);
    OracleLimits tight;
    tight.max_vertices = 2;
    tight.max_edges = 2;
    EXPECT_THROW((void)exact_mwm_oracle(StaticGraph({Edge(0, 1), Edge(2, 3), Edge(4, 5)}), tight), Error);
}

TEST(Oracles, SparseGraphsAdmittedByEdgeCount) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 20; ++i) edges.emplace_back(2 * i, 2 * i + 1, i + 1);
    const StaticGraph g(edges);
    EXPECT_EQ(exact_mcm_oracle(g), 20u);
    EXPECT_EQ(exact_mwm_oracle(g), 210);
}

TEST(Oracles, SubsetAndBranchSolversAgree) {
    std::mt19937_64 rng(4);
    OracleLimits branch_only;
    branch_only.max_vertices = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const StaticGraph g = testutil::any_graph(rng, 10, 1, 12);
        if (g.edge_count() > 32) continue;
        ASSERT_EQ(exact_mwm_oracle(g), exact_mwm_oracle(g, branch_only));
        ASSERT_EQ(exact_mcm_oracle(g), exact_mcm_oracle(g, branch_only));
    }
}

TEST(Oracles, VertexCoverMatchesSubsetEnumeration) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const StaticGraph g = testutil::any_graph(rng, 11);
        const auto vc = exact_min_vc_oracle(g);
        ASSERT_EQ(vc, brute_vc(g));
        ASSERT_GE(vc, exact_mcm_oracle(g));
        ASSERT_LE(vc, 2 * exact_mcm_oracle(g));
    }
}
