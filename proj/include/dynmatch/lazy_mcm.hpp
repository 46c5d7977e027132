#ifndef DYNMATCH_LAZY_MCM_HPP_
#define DYNMATCH_LAZY_MCM_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "dynmatch/core_subgraph.hpp"
#include "dynmatch/cover_maintainer.hpp"
#include "dynmatch/dynamic_graph.hpp"
#include "dynmatch/matching.hpp"
#include "dynmatch/static_match.hpp"

namespace dynmatch {

/// Updates a freshly computed matching stays valid for:
/// max(1, floor(eps / 4 * amount)).
inline std::int64_t window_length(double eps, long double amount) {
    const long double raw = std::floor(static_cast<long double>(eps) / 4 * amount + 1e-9L);
    return std::max<std::int64_t>(1, static_cast<std::int64_t>(raw));
}

inline void check_epsilon(double eps) {
    if (!(eps > 0.0 && eps < 1.0)) throw Error(ErrorCode::InvalidParams, "eps must lie in (0, 1)");
}

struct RebuildRecord {
    std::uint64_t seq = 0;
    /// Updates since the previous rebuild, including this one.
    std::uint64_t updates_since = 0;
    /// Window granted by the previous rebuild.
    std::int64_t window = 1;
    std::size_t size = 0;
    Weight weight = 0;
    /// Window granted by this rebuild.
    std::int64_t next_window = 1;
    std::size_t cover_size = 0;
    std::size_t core_edges = 0;
    /// Reads of the live graph made while building the core.
    std::uint64_t core_reads = 0;
};

/// Keeps a matching that is rebuilt from the core subgraph whenever its
/// window of updates runs out. Deleted matched edges leave immediately;
/// insertions cost nothing until the next rebuild.
///
/// Invariant: matching() is valid in the current graph and within a factor
/// (1 + eps) of optimal, as long as every update is fed through update().
class LazyMatcher {
public:
    struct Config {
        double eps = 0.1;
        bool weighted = false;
        /// Window divisor: matching weight is measured in units of
        /// unit * n_cap. Both are 1 for cardinality.
        long double unit = 1;
        long double n_cap = 1;
    };

    explicit LazyMatcher(Config cfg) : cfg_(cfg) {
        check_epsilon(cfg.eps);
        if (!(cfg.unit > 0 && cfg.n_cap >= 1)) throw Error(ErrorCode::InvalidParams, "bad weight scale");
    }

    const Matching& matching() const noexcept { return matching_; }
    std::int64_t counter() const noexcept { return t_; }
    double eps() const noexcept { return cfg_.eps; }
    const Config& config() const noexcept { return cfg_; }
    std::uint64_t last_rebuild_version() const noexcept { return last_rebuild_version_; }
    std::uint64_t steps_last_update() const noexcept { return steps_last_; }
    const std::vector<RebuildRecord>& rebuilds() const noexcept { return log_; }
    void set_logging(bool on) { logging_ = on; }

    /// Rejects an update before it reaches the graph. Cardinality accepts all.
    void check_update(const UpdateEvent&) const {}

    /// Handles one update already applied to g and noted by cov.
    void update(const DynamicGraph& g, CoverState& cov, const UpdateEvent& ev) {
        steps_last_ = 0;
        if (ev.is_delete()) matching_.remove(ev.edge);
        ++since_;
        --t_;
        if (t_ <= 0) rebuild(g, cov, ev.seq);
    }

    /// Recomputes the matching and the cover from the core subgraph.
    void rebuild(const DynamicGraph& g, CoverState& cov, std::uint64_t seq) {
        const std::uint64_t reads_before = g.reads();
        auto build = build_core_task(g, cov.cover(), CoreOptions{cfg_.weighted, false}, g.version());
        steps_last_ += build.run_to_completion();
        const CoreSubgraph core = build.take_result();
        const std::uint64_t core_reads = g.reads() - reads_before;

        auto solve = cfg_.weighted ? approx_mwm_task(core.graph, cfg_.eps / 4)
                                   : approx_mcm_task(core.graph, cfg_.eps / 4);
        steps_last_ += solve.run_to_completion();
        matching_ = solve.take_result();

        auto cover = approx_cover_task(core.graph);
        steps_last_ += cover.run_to_completion();
        cov.adopt(cover.take_result(), g.version());

        const std::int64_t next = window_length(cfg_.eps, window_amount());
        if (logging_) {
            log_.push_back({seq, since_, window_, matching_.size(), matching_.weight(), next, core.cover.size(),
                            core.graph.edge_count(), core_reads});
        }
        t_ = next;
        window_ = next;
        since_ = 0;
        last_rebuild_version_ = g.version();
    }

private:
    long double window_amount() const {
        if (!cfg_.weighted) return static_cast<long double>(matching_.size());
        return static_cast<long double>(matching_.weight()) / (cfg_.unit * cfg_.n_cap);
    }

    Config cfg_;
    Matching matching_;
    std::int64_t t_ = 1;
    std::int64_t window_ = 1;
    std::uint64_t since_ = 0;
    std::uint64_t last_rebuild_version_ = 0;
    std::uint64_t steps_last_ = 0;
    bool logging_ = true;
    std::vector<RebuildRecord> log_;
};

/// Cardinality flavor: rebuilds with an unweighted core and tolerance eps/4.
class LazyMcmState : public LazyMatcher {
public:
    explicit LazyMcmState(double eps) : LazyMatcher(Config{eps, false, 1, 1}) {}
};

inline void lazy_update(LazyMcmState& st, const DynamicGraph& g, CoverState& cov, const UpdateEvent& ev) {
    st.update(g, cov, ev);
}

inline const Matching& current_matching(const LazyMcmState& st) { return st.matching(); }

/// Graph, cover and matcher wired together in the required order.
template <class State>
class LazyDriver {
public:
    template <class... Args>
    explicit LazyDriver(GraphOptions options, Args&&... args)
        : graph_(options), state_(std::forward<Args>(args)...) {}

    /// Applies ev to every component. ev.edge.w is filled in on deletions.
    void apply(UpdateEvent& ev) {
        state_.check_update(ev);
        graph_.apply_update(ev);
        cover_.note_update(ev);
        state_.update(graph_, cover_, ev);
        cover_.refresh_if_due(graph_);
    }

    const DynamicGraph& graph() const noexcept { return graph_; }
    const CoverState& cover() const noexcept { return cover_; }
    const State& state() const noexcept { return state_; }
    State& state() noexcept { return state_; }
    const Matching& matching() const noexcept { return state_.matching(); }

private:
    DynamicGraph graph_;
    CoverState cover_;
    State state_;
};

}  // namespace dynmatch

#endif  // DYNMATCH_LAZY_MCM_HPP_
