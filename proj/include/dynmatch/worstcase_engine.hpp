#ifndef DYNMATCH_WORSTCASE_ENGINE_HPP_
#define DYNMATCH_WORSTCASE_ENGINE_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "dynmatch/core_subgraph.hpp"
#include "dynmatch/dynamic_graph.hpp"
#include "dynmatch/lazy_mcm.hpp"
#include "dynmatch/matching.hpp"
#include "dynmatch/static_match.hpp"
#include "dynmatch/step_task.hpp"

namespace dynmatch {

enum class RoundPhase { Idle, BuildCore, RunMatcher, RunCover };

inline const char* to_string(RoundPhase p) noexcept {
    switch (p) {
    case RoundPhase::Idle: return "Idle";
    case RoundPhase::BuildCore: return "BuildCore";
    case RoundPhase::RunMatcher: return "RunMatcher";
    case RoundPhase::RunCover: return "RunCover";
    }
    return "Unknown";
}

struct EngineConfig {
    double eps = 0.25;
    /// Weight spread of the input; weights lie in [unit, unit * n_cap].
    long double n_cap = 1;
    long double unit = 1;
    /// Constant in front of the per-update step budget.
    double budget_const = 64;
    /// Finish every round in the update that starts it.
    bool unbounded = false;
};

/// Steps allowed per update for a round that starts with m0 edges:
/// c * N * max(1, ceil(sqrt(m0))) * eps^-2 * max(1, ceil(log2(1 / eps))).
inline std::uint64_t round_budget(const EngineConfig& cfg, std::size_t m0) {
    const long double root = std::max<long double>(1, std::ceil(std::sqrt(static_cast<long double>(m0))));
    const long double logs = std::max<long double>(1, std::ceil(std::log2(1.0L / cfg.eps)));
    const long double eps = cfg.eps;
    const long double raw = cfg.budget_const * cfg.n_cap * root * logs / (eps * eps);
    return static_cast<std::uint64_t>(std::max<long double>(1, std::floor(raw)));
}

struct RoundRecord {
    std::uint64_t start_seq = 0;
    std::uint64_t end_seq = 0;
    std::size_t m0 = 0;
    std::size_t cover_size = 0;
    std::uint64_t budget = 0;
    std::uint64_t steps = 0;
};

/// Deamortized lazy weighted matcher. A round snapshots the graph, builds the
/// weighted core from the current cover, runs the eps/4 matcher and the
/// cover routine on it, spending at most budget_per_update() steps per
/// update. Deletions seen mid-round are subtracted from the round's result;
/// their first endpoint and all insertion endpoints join the next cover.
///
/// Invariant: published() is a valid matching of the current graph.
class RoundState {
public:
    explicit RoundState(EngineConfig cfg) : cfg_(cfg) {
        check_epsilon(cfg.eps);
        if (!(cfg.unit > 0 && cfg.n_cap >= 1 && cfg.budget_const > 0)) {
            throw Error(ErrorCode::InvalidParams, "bad engine configuration");
        }
    }

    // In-flight tasks point into this object.
    RoundState(const RoundState&) = delete;
    RoundState& operator=(const RoundState&) = delete;

    const EngineConfig& config() const noexcept { return cfg_; }
    const Matching& published() const noexcept { return published_; }
    const VertexSet& cover() const noexcept { return cover_; }
    RoundPhase phase() const noexcept { return phase_; }
    bool active() const noexcept { return phase_ != RoundPhase::Idle; }
    std::int64_t counter() const noexcept { return t_; }
    std::uint64_t steps_this_update() const noexcept { return steps_; }
    std::uint64_t budget_per_update() const noexcept { return budget_; }
    bool round_started_this_update() const noexcept { return started_now_; }
    const std::vector<RoundRecord>& rounds() const noexcept { return rounds_; }
    const std::set<Edge>& pending_deletions() const noexcept { return pending_deletions_; }
    const VertexSet& pending_cover_adds() const noexcept { return pending_cover_adds_; }

    /// Handles one update already applied to g.
    void update(const DynamicGraph& g, const UpdateEvent& ev) {
        steps_ = 0;
        started_now_ = false;
        const Edge& e = ev.edge;
        if (ev.is_delete()) {
            published_.remove(e);
            if (active()) {
                pending_deletions_.insert(e);
                pending_cover_adds_.insert(e.u);
            }
        } else {
            cover_.insert(e.u);
            cover_.insert(e.v);
            if (active()) {
                pending_cover_adds_.insert(e.u);
                pending_cover_adds_.insert(e.v);
            }
        }
        --t_;
        if (!active() && t_ <= 0) start_round(g, ev.seq);
        if (active()) advance(ev.seq);
    }

private:
    void start_round(const DynamicGraph& g, std::uint64_t seq) {
        snapshot_ = g.snapshot();
        core_.reset();
        result_.reset();
        pending_deletions_.clear();
        pending_cover_adds_.clear();
        budget_ = cfg_.unbounded ? kUnboundedSteps : round_budget(cfg_, snapshot_->edge_count());
        build_ = build_core_task(snapshot_.graph(), cover_, CoreOptions{true, false}, snapshot_.version());
        phase_ = RoundPhase::BuildCore;
        started_now_ = true;
        rounds_.push_back({seq, 0, snapshot_->edge_count(), cover_.size(), budget_, 0});
    }

    void advance(std::uint64_t seq) {
        while (active() && steps_ < budget_) {
            const std::uint64_t left = budget_ - steps_;
            switch (phase_) {
            case RoundPhase::BuildCore:
                steps_ += build_.process_steps(left);
                if (build_.finished()) {
                    core_.emplace(build_.take_result());
                    build_ = {};
                    matcher_ = approx_mwm_task(core_->graph, cfg_.eps / 4);
                    phase_ = RoundPhase::RunMatcher;
                }
                break;
            case RoundPhase::RunMatcher:
                steps_ += matcher_.process_steps(left);
                if (matcher_.finished()) {
                    result_.emplace(matcher_.take_result());
                    matcher_ = {};
                    cover_task_ = approx_cover_task(core_->graph);
                    phase_ = RoundPhase::RunCover;
                }
                break;
            case RoundPhase::RunCover:
                steps_ += cover_task_.process_steps(left);
                if (cover_task_.finished()) finish(seq);
                break;
            case RoundPhase::Idle:
                break;
            }
        }
        if (!rounds_.empty()) rounds_.back().steps += steps_;
    }

    void finish(std::uint64_t seq) {
        CoverResult fresh = cover_task_.take_result();
        cover_task_ = {};
        Matching next;
        for (const Edge& e : *result_) {
            if (pending_deletions_.count(e) == 0) next.add(e);
        }
        published_ = std::move(next);
        cover_ = std::move(fresh.cover);
        cover_.insert(pending_cover_adds_.begin(), pending_cover_adds_.end());
        pending_deletions_.clear();
        pending_cover_adds_.clear();
        core_.reset();
        result_.reset();
        snapshot_ = GraphSnapshot();
        const long double amount = static_cast<long double>(published_.weight()) / (cfg_.unit * cfg_.n_cap);
        t_ = window_length(cfg_.eps, amount);
        phase_ = RoundPhase::Idle;
        rounds_.back().end_seq = seq;
    }

    EngineConfig cfg_;
    Matching published_;
    VertexSet cover_;
    RoundPhase phase_ = RoundPhase::Idle;
    std::int64_t t_ = 1;
    std::uint64_t steps_ = 0;
    std::uint64_t budget_ = 0;
    bool started_now_ = false;

    GraphSnapshot snapshot_;
    std::optional<CoreSubgraph> core_;
    std::optional<Matching> result_;
    StepTask<CoreSubgraph> build_;
    StepTask<Matching> matcher_;
    StepTask<CoverResult> cover_task_;
    std::set<Edge> pending_deletions_;
    VertexSet pending_cover_adds_;
    std::vector<RoundRecord> rounds_;
};

inline void round_update(RoundState& rs, const DynamicGraph& g, const UpdateEvent& ev) { rs.update(g, ev); }

inline std::uint64_t steps_this_update(const RoundState& rs) { return rs.steps_this_update(); }

}  // namespace dynmatch

#endif  // DYNMATCH_WORSTCASE_ENGINE_HPP_
