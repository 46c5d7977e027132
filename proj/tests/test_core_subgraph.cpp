#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "dynmatch/core_subgraph.hpp"
#include "dynmatch/oracles.hpp"
#include "dynmatch/static_match.hpp"
#include "test_util.hpp"

using namespace dynmatch;

TEST(BuildCore, StarKeepsTwoEdges) {
    std::vector<Edge> edges;
    for (Vertex leaf = 1; leaf <= 5; ++leaf) edges.emplace_back(0, leaf);
    const StaticGraph g(edges);
    const auto core = build_core(g, {0});
    EXPECT_EQ(core.graph.edge_count(), 2u);
    EXPECT_EQ(exact_mcm_oracle(core.graph), exact_mcm_oracle(g));
    EXPECT_EQ(exact_mcm_oracle(core.graph), 1u);
}

TEST(BuildCore, CompleteBipartiteKeepsThreePerCoverVertex) {
    std::vector<Edge> edges;
    for (Vertex a : {0u, 1u}) {
        for (Vertex b = 10; b < 16; ++b) edges.emplace_back(a, b);
    }
    const StaticGraph g(edges);
    const auto core = build_core(g, {0, 1});
    for (Vertex a : {0u, 1u}) EXPECT_LE(core.graph.degree(a), 3u);
    EXPECT_EQ(exact_mcm_oracle(core.graph), 2u);
    EXPECT_EQ(exact_mcm_oracle(g), 2u);
}

TEST(BuildCore, FullCoverKeepsEverything) {
    const StaticGraph g({Edge(0, 1, 3), Edge(1, 2, 4), Edge(0, 2, 5), Edge(2, 3, 1)});
    const auto core = build_core(g, {0, 1, 2, 3}, CoreOptions{true, false});
    EXPECT_TRUE(core.graph == g);
}

TEST(BuildCore, WeightedKeepsHeaviestOutsideEdges) {
    const StaticGraph g({Edge(0, 1, 1), Edge(0, 2, 7), Edge(0, 3, 5), Edge(0, 4, 2)});
    const auto core = build_core(g, {0}, CoreOptions{true, false});
    EXPECT_TRUE(core.graph.has_edge(0, 2));
    EXPECT_TRUE(core.graph.has_edge(0, 3));
    EXPECT_EQ(core.graph.edge_count(), 2u);
}

TEST(BuildCore, CheckedModeRejectsBadCover) {
    const StaticGraph g({Edge(0, 1), Edge(2, 3)});
    try {
        (void)build_core(g, {0}, CoreOptions{false, true});
        FAIL() << "expected InvalidCover";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidCover);
    }
}

TEST(BuildCore, RecordsSourceVersion) {
    DynamicGraph g;
    g.apply_update(make_insert(0, 1));
    g.apply_update(make_insert(1, 2));
    EXPECT_EQ(build_core(g, {1}).source_version, 2u);
}

TEST(BuildCoreProperty, PreservesOptimumAndStructure) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 600; ++trial) {
        const StaticGraph g = testutil::any_graph(rng, 14, 1, 1 + trial % 40);
        const VertexSet cover = approx_cover(g).cover;
        const auto plain = build_core(g, cover, CoreOptions{false, true});
        const auto heavy = build_core(g, cover, CoreOptions{true, true});
        ASSERT_EQ(exact_mcm_oracle(plain.graph), exact_mcm_oracle(g));
        ASSERT_EQ(exact_mwm_oracle(heavy.graph), exact_mwm_oracle(g));

        const std::size_t c = cover.size();
        for (const auto* core : {&plain, &heavy}) {
            ASSERT_LE(core->graph.edge_count(), std::min(g.edge_count(), core_edge_bound(c)));
            std::map<Vertex, std::size_t> outward;
            core->graph.for_each_edge([&](const Edge& e) {
                ASSERT_TRUE(g.has_edge(e.u, e.v));
                const bool in_u = cover.count(e.u) != 0;
                const bool in_v = cover.count(e.v) != 0;
                ASSERT_TRUE(in_u || in_v);
                if (in_u && !in_v) ++outward[e.u];
                if (in_v && !in_u) ++outward[e.v];
            });
            for (const auto& [u, k] : outward) ASSERT_LE(k, c + 1);
            g.for_each_edge([&](const Edge& e) {
                if (cover.count(e.u) && cover.count(e.v)) {
                    ASSERT_TRUE(core->graph.has_edge(e.u, e.v));
                }
            });
        }
    }
}

TEST(BuildCoreProperty, ReadsDependOnlyOnCoverSize) {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 100; ++trial) {
        const StaticGraph g = testutil::random_graph(rng, 60, 0.3, 1, 9);
        const VertexSet cover = approx_cover(g).cover;
        VertexSet small;
        for (Vertex v : cover) {
            if (small.size() < 5) small.insert(v);
        }
        const std::size_t c = small.size();
        g.reset_reads();
        (void)build_core(g, small, CoreOptions{true, false});
        EXPECT_LE(g.reads(), c * c + c * (2 * c + 1));
    }
}
