#include <gtest/gtest.h>

#include "dynmatch/lazy_mcm.hpp"
#include "dynmatch/oracles.hpp"
#include "dynmatch/weighted_lazy.hpp"
#include "dynmatch/workload.hpp"
#include "test_util.hpp"

using namespace dynmatch;

namespace {

using Weighted = LazyDriver<WeightedLazyState>;

Weighted make_weighted(double eps, Weight n_cap) {
    return Weighted(GraphOptions{n_cap}, eps, static_cast<long double>(n_cap), 1.0L);
}

void feed(Weighted& d, UpdateEvent ev) { d.apply(ev); }

}  // namespace

TEST(WeightedLazy, UnitWeightsTrackCardinalityVersion) {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const auto params = testutil::stream_params(static_cast<WorkloadKind>(seed % 3), 12, 500, 1, seed);
        Weighted w = make_weighted(0.3, 1);
        LazyDriver<LazyMcmState> c(GraphOptions{}, 0.3);
        for (UpdateEvent ev : generate_workload(params)) {
            UpdateEvent copy = ev;
            w.apply(ev);
            c.apply(copy);
            ASSERT_EQ(w.matching().size(), c.matching().size()) << "seq " << ev.seq;
            ASSERT_EQ(w.state().counter(), c.state().counter());
            ASSERT_EQ(w.cover().cover(), c.cover().cover());
        }
        ASSERT_EQ(w.state().rebuilds().size(), c.state().rebuilds().size());
    }
}

TEST(WeightedLazy, WindowFloorsToOne) {
    // floor(0.4 / 4 * 40 / 10) = 0, floored to 1.
    EXPECT_EQ(window_length(0.4, 40.0L / 10), 1);
    Weighted d = make_weighted(0.4, 10);
    for (Vertex i = 0; i < 4; ++i) feed(d, make_insert(2 * i, 2 * i + 1, 10));
    ASSERT_EQ(d.matching().weight(), 40);
    EXPECT_EQ(d.state().rebuilds().back().next_window, 1);
    EXPECT_EQ(d.state().counter(), 1);
}

TEST(WeightedLazy, DeletingMatchedEdgeSubtractsItsWeight) {
    Weighted d = make_weighted(0.2, 9);
    for (Vertex i = 0; i < 12; ++i) feed(d, make_insert(2 * i, 2 * i + 1, 9));
    ASSERT_TRUE(d.matching().contains(Edge(0, 1)));
    const Weight before = d.matching().weight();
    feed(d, make_delete(0, 1));
    EXPECT_EQ(d.matching().weight(), before - 9);
    EXPECT_GE(1.2 * d.matching().weight(), static_cast<double>(exact_mwm_oracle(d.graph())));
}

TEST(WeightedLazy, SingleEdgeIsMatched) {
    Weighted d = make_weighted(0.25, 8);
    feed(d, make_insert(3, 4, 6));
    ASSERT_EQ(current_weighted_matching(d.state()).size(), 1u);
    EXPECT_TRUE(d.matching().contains(Edge(3, 4)));
}

TEST(WeightedLazy, RejectsWeightOutsideSlice) {
    WeightedLazyState st(0.25, 4, 2);
    try {
        st.check_update(make_insert(0, 1, 9));
        FAIL() << "expected WeightOutOfRange";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::WeightOutOfRange);
    }
    EXPECT_THROW(st.check_update(make_insert(0, 1, 1)), Error);
    EXPECT_NO_THROW(st.check_update(make_insert(0, 1, 8)));
    EXPECT_NO_THROW(st.check_update(make_delete(0, 1)));
}

TEST(WeightedLazy, DeleteDownToEmptyKeepsRatio) {
    Weighted d = make_weighted(0.25, 8);
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 7; ++i) edges.emplace_back(2 * i, 2 * i + 1, 1 + i);
    for (const Edge& e : edges) feed(d, make_insert(e.u, e.v, e.w));
    for (const Edge& e : edges) {
        feed(d, make_delete(e.u, e.v));
        ASSERT_TRUE(d.matching().valid_in(d.graph()));
        ASSERT_GE(1.25 * d.matching().weight(), static_cast<double>(exact_mwm_oracle(d.graph())));
    }
    EXPECT_TRUE(d.matching().empty());
}

TEST(WeightedLazyProperty, RatioAndWindowOnRandomStreams) {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        auto params = testutil::stream_params(static_cast<WorkloadKind>(seed % 4), 10 + seed % 5, 600, 8, seed);
        Weighted d = make_weighted(0.25, 8);
        WorkloadGenerator gen(params, [&] { return d.matching(); });
        while (!gen.done()) {
            UpdateEvent ev = gen.next();
            d.apply(ev);
            ASSERT_TRUE(d.matching().valid_in(d.graph()));
            ASSERT_GE(1.25L * d.matching().weight(), exact_mwm_oracle(d.graph()) * (1 - 1e-12L))
                << "seed " << seed << " seq " << ev.seq;
        }
        for (const auto& r : d.state().rebuilds()) {
            ASSERT_LE(static_cast<std::int64_t>(r.updates_since), r.window);
            ASSERT_EQ(r.next_window, window_length(0.25, static_cast<long double>(r.weight) / 8));
        }
    }
}
