#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "dynmatch/dynamic_graph.hpp"
#include "dynmatch/stream_io.hpp"
#include "dynmatch/workload.hpp"
#include "test_util.hpp"

using namespace dynmatch;

TEST(DynamicGraph, InsertCreatesSymmetricAdjacency) {
    DynamicGraph g;
    g.apply_update(make_insert(1, 2));
    EXPECT_EQ(g.edge_count(), 1u);
    ASSERT_EQ(g.neighbors(1).size(), 1u);
    EXPECT_EQ(g.neighbors(1).begin()->first, 2u);
    EXPECT_EQ(g.neighbors(2).begin()->first, 1u);
}

TEST(DynamicGraph, DeleteMatchesCanonicalForm) {
    DynamicGraph g;
    g.apply_update(make_insert(1, 2));
    g.apply_update(make_delete(2, 1));
    EXPECT_EQ(g.edge_count(), 0u);
    EXPECT_EQ(g.vertex_count(), 0u);
}

TEST(DynamicGraph, RejectsDuplicateInsert) {
    DynamicGraph g;
    g.apply_update(make_insert(1, 2));
    try {
        g.apply_update(make_insert(2, 1));
        FAIL() << "expected DuplicateInsert";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DuplicateInsert);
    }
    EXPECT_EQ(g.edge_count(), 1u);
    EXPECT_EQ(g.version(), 1u);
}

TEST(DynamicGraph, RejectsMissingDelete) {
    DynamicGraph g;
    try {
        g.apply_update(make_delete(3, 4));
        FAIL() << "expected MissingDelete";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::MissingDelete);
    }
}

TEST(DynamicGraph, RejectsWeightsOutsideCap) {
    DynamicGraph g(GraphOptions{8});
    g.apply_update(make_insert(0, 1, 8));
    try {
        g.apply_update(make_insert(0, 2, 9));
        FAIL() << "expected WeightOutOfRange";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::WeightOutOfRange);
    }
    EXPECT_THROW(g.apply_update(make_insert(0, 3, 0)), Error);
}

TEST(DynamicGraph, SelfLoopIsRejected) {
    try {
        (void)make_insert(4, 4);
        FAIL() << "expected SelfLoop";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SelfLoop);
    }
}

TEST(DynamicGraph, DeleteReportsStoredWeight) {
    DynamicGraph g(GraphOptions{10});
    g.apply_update(make_insert(5, 3, 7));
    UpdateEvent del = make_delete(3, 5);
    g.apply_update(del);
    EXPECT_EQ(del.edge.w, 7);
}

TEST(TopWeightNeighbors, UnweightedTakesSmallestIds) {
    DynamicGraph g;
    for (Vertex leaf = 1; leaf <= 5; ++leaf) g.apply_update(make_insert(0, leaf));
    const auto got = g.top_weight_neighbors(0, 2, {0}, NeighborOrder::ById);
    ASSERT_EQ(got.size(), 2u);
    EXPECT_EQ(got[0].v, 1u);
    EXPECT_EQ(got[1].v, 2u);
}

TEST(TopWeightNeighbors, WeightedTakesHeaviest) {
    DynamicGraph g(GraphOptions{10});
    g.apply_update(make_insert(0, 1, 5));
    g.apply_update(make_insert(0, 2, 3));
    g.apply_update(make_insert(0, 3, 9));
    const auto got = g.top_weight_neighbors(0, 2, {});
    ASSERT_EQ(got.size(), 2u);
    EXPECT_EQ(got[0].w, 9);
    EXPECT_EQ(got[1].w, 5);
}

TEST(TopWeightNeighbors, AllExcludedGivesNothing) {
    DynamicGraph g;
    g.apply_update(make_insert(0, 1));
    g.apply_update(make_insert(0, 2));
    EXPECT_TRUE(g.top_weight_neighbors(0, 3, {1, 2}).empty());
    EXPECT_TRUE(g.top_weight_neighbors(7, 3, {}).empty());
}

TEST(TopWeightNeighbors, TiesBreakBySmallerId) {
    DynamicGraph g(GraphOptions{4});
    g.apply_update(make_insert(0, 9, 4));
    g.apply_update(make_insert(0, 3, 4));
    g.apply_update(make_insert(0, 5, 4));
    const auto got = g.top_weight_neighbors(0, 2, {});
    ASSERT_EQ(got.size(), 2u);
    EXPECT_EQ(got[0].v, 3u);
    EXPECT_EQ(got[1].v, 5u);
}

TEST(TopWeightNeighbors, MaxKPropertyAgainstFullScan) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const StaticGraph g = testutil::any_graph(rng, 12, 1, 6);
        for (Vertex u : g.vertices()) {
            VertexSet excluded;
            for (Vertex x : g.vertices()) {
                if (rng() % 3 == 0) excluded.insert(x);
            }
            const std::size_t k = rng() % 5;
            const auto got = g.top_weight_neighbors(u, k, excluded);
            std::vector<Weight> eligible;
            for (const auto& [x, w] : g.neighbors(u)) {
                if (excluded.count(x) == 0) eligible.push_back(w);
            }
            ASSERT_EQ(got.size(), std::min(k, eligible.size()));
            std::sort(eligible.rbegin(), eligible.rend());
            for (std::size_t i = 0; i < got.size(); ++i) {
                EXPECT_EQ(got[i].w, eligible[i]);
                EXPECT_EQ(excluded.count(got[i].other(u)), 0u);
            }
        }
    }
}

TEST(Snapshot, SurvivesLaterDeletes) {
    DynamicGraph g;
    g.apply_update(make_insert(1, 2));
    const GraphSnapshot snap = g.snapshot();
    g.apply_update(make_delete(1, 2));
    EXPECT_TRUE(snap->has_edge(1, 2));
    EXPECT_EQ(snap.version(), 1u);
}

TEST(Snapshot, OfEmptyGraphIsEmpty) {
    DynamicGraph g;
    EXPECT_EQ(g.snapshot()->edge_count(), 0u);
}

TEST(Snapshot, UnchangedUnderChurn) {
    DynamicGraph g;
    for (Vertex v = 1; v <= 4; ++v) g.apply_update(make_insert(0, v));
    const GraphSnapshot snap = g.snapshot();
    const auto before = snap->edges();
    for (Vertex v = 1; v <= 4; ++v) g.apply_update(make_delete(0, v));
    for (Vertex v = 5; v <= 10; ++v) g.apply_update(make_insert(1, v));
    EXPECT_EQ(snap->edge_count(), 4u);
    EXPECT_EQ(snap->edges(), before);
}

TEST(DynamicGraph, VersionBumpsOncePerUpdate) {
    DynamicGraph g;
    const auto events = generate_workload(testutil::stream_params(WorkloadKind::UniformChurn, 8, 200, 1, 4));
    for (std::size_t i = 0; i < events.size(); ++i) {
        g.apply_update(events[i]);
        EXPECT_EQ(g.version(), i + 1);
    }
}

TEST(DynamicGraph, CanonicalReplayGivesSameGraph) {
    std::mt19937_64 rng(2);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto events = generate_workload(testutil::stream_params(WorkloadKind::UniformChurn, 10, 300, 5, seed));
        DynamicGraph a(GraphOptions{5});
        DynamicGraph b(GraphOptions{5});
        for (const auto& ev : events) {
            a.apply_update(ev);
            UpdateEvent flipped = ev;
            if (rng() % 2 == 0) {
                flipped = ev.is_insert() ? make_insert(ev.edge.v, ev.edge.u, ev.edge.w) : make_delete(ev.edge.v, ev.edge.u);
            }
            b.apply_update(flipped);
            ASSERT_TRUE(a == b);
            ASSERT_EQ(a.edge_count(), a.edges().size());
        }
    }
}

TEST(DynamicGraph, AdjacencyStaysSymmetric) {
    DynamicGraph g(GraphOptions{9});
    for (const auto& ev : generate_workload(testutil::stream_params(WorkloadKind::UniformChurn, 9, 400, 9, 5))) {
        g.apply_update(ev);
        std::size_t halves = 0;
        for (Vertex u : g.vertices()) {
            for (const auto& [v, w] : g.neighbors(u)) {
                ++halves;
                ASSERT_EQ(g.weight(v, u), w);
            }
            ASSERT_EQ(g.adjacency(u)->by_id.size(), g.adjacency(u)->by_weight.size());
        }
        ASSERT_EQ(halves, 2 * g.edge_count());
    }
}
