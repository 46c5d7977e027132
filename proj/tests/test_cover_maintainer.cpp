#include <gtest/gtest.h>

#include "dynmatch/cover_maintainer.hpp"
#include "dynmatch/oracles.hpp"
#include "dynmatch/workload.hpp"
#include "test_util.hpp"

using namespace dynmatch;

namespace {

void feed(CoverState& st, DynamicGraph& g, UpdateEvent ev) {
    g.apply_update(ev);
    cover_on_update(st, g, ev);
}

}  // namespace

TEST(CoverState, FirstInsertRefreshesToTheEdge) {
    CoverState st;
    DynamicGraph g;
    feed(st, g, make_insert(1, 2));
    EXPECT_EQ(current_cover(st), (VertexSet{1, 2}));
    EXPECT_EQ(st.refresh_count(), 1u);
    EXPECT_EQ(st.base_matching().size(), 1u);
}

TEST(CoverState, RefreshOnStarPicksCenterAndLeaf) {
    CoverState st;
    DynamicGraph g;
    feed(st, g, make_insert(1, 2));
    ASSERT_EQ(st.cover(), (VertexSet{1, 2}));
    feed(st, g, make_insert(3, 4));
    feed(st, g, make_delete(1, 2));
    feed(st, g, make_insert(3, 5));
    EXPECT_EQ(st.cover(), (VertexSet{3, 4}));
}

TEST(CoverState, DeletionOnlyDecrementsCounter) {
    CoverState st;
    DynamicGraph g;
    for (Vertex i = 0; i < 8; ++i) feed(st, g, make_insert(2 * i, 2 * i + 1));
    for (Vertex i = 0; i < 8; ++i) feed(st, g, make_insert(100 + i, 200 + i));
    const auto before = st.cover();
    const auto counter = st.counter();
    ASSERT_GT(counter, 1);
    const auto refreshes = st.refresh_count();
    feed(st, g, make_delete(100, 200));
    EXPECT_EQ(st.cover(), before);
    EXPECT_EQ(st.counter(), counter - 1);
    EXPECT_EQ(st.refresh_count(), refreshes);
}

TEST(CoverState, PathRefreshCoversAllFour) {
    CoverState st;
    const StaticGraph g({Edge(1, 2), Edge(2, 3), Edge(3, 4)});
    for (Vertex v = 1; v <= 4; ++v) st.add(v);
    st.refresh(g, 0);
    EXPECT_EQ(current_cover(st), (VertexSet{1, 2, 3, 4}));
}

TEST(CoverState, EmptyGraphHasEmptyCover) {
    CoverState st;
    EXPECT_TRUE(current_cover(st).empty());
}

TEST(CoverStateProperty, ValidBoundedAndMaximalOnRefresh) {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        const auto kind = static_cast<WorkloadKind>(seed % 3);
        const auto events = generate_workload(testutil::stream_params(kind, 13, 600, 1, seed));
        CoverState st;
        DynamicGraph g;
        std::size_t last_refresh = 0;
        std::size_t refresh_cover = 0;
        std::uint64_t refresh_version = 0;
        for (const auto& ev : events) {
            feed(st, g, ev);
            ASSERT_TRUE(is_vertex_cover(g, st.cover()));
            ASSERT_LE(st.cover().size(), 5 * exact_min_vc_oracle(g));
            if (st.refresh_count() != last_refresh) {
                last_refresh = st.refresh_count();
                refresh_cover = st.cover().size();
                refresh_version = g.version();
                ASSERT_LE(st.cover().size(), 2 * exact_mcm_oracle(g));
                ASSERT_TRUE(st.base_matching().maximal_in(g));
                ASSERT_TRUE(st.base_matching().valid_in(g));
            } else {
                ASSERT_LE(st.cover().size(), refresh_cover + 2 * (g.version() - refresh_version));
            }
        }
    }
}
