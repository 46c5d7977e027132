#ifndef DYNMATCH_HARNESS_HPP_
#define DYNMATCH_HARNESS_HPP_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dynmatch/dynamic_graph.hpp"
#include "dynmatch/lazy_mcm.hpp"
#include "dynmatch/matching.hpp"
#include "dynmatch/mwm_schemes.hpp"
#include "dynmatch/oracles.hpp"
#include "dynmatch/stream_io.hpp"
#include "dynmatch/weighted_lazy.hpp"
#include "dynmatch/workload.hpp"
#include "dynmatch/worstcase_engine.hpp"

namespace dynmatch {

enum class GuaranteeKind { Cardinality, Weight };

/// A fully dynamic matcher as seen by the stream driver.
class DynamicMatcher {
public:
    virtual ~DynamicMatcher() = default;

    virtual std::string name() const = 0;
    virtual GuaranteeKind guarantee_kind() const = 0;
    /// Promised bound on optimum / maintained value.
    virtual long double guarantee_ratio() const = 0;
    /// Applies one update; on deletions ev.edge.w receives the stored weight.
    virtual void apply(UpdateEvent& ev) = 0;
    virtual Matching matching() const = 0;
    virtual const AdjacencyGraph& graph() const = 0;
    virtual std::uint64_t steps_last_update() const = 0;
    /// Per-update step allowance in force for the last update, if any.
    virtual std::optional<std::uint64_t> step_budget() const { return std::nullopt; }
};

class LazyMcmMatcher final : public DynamicMatcher {
public:
    LazyMcmMatcher(double eps, Weight n_cap) : driver_(GraphOptions{n_cap}, eps) {}
    std::string name() const override { return "lazy-mcm"; }
    GuaranteeKind guarantee_kind() const override { return GuaranteeKind::Cardinality; }
    long double guarantee_ratio() const override { return 1.0L + driver_.state().eps(); }
    void apply(UpdateEvent& ev) override { driver_.apply(ev); }
    Matching matching() const override { return driver_.matching(); }
    const AdjacencyGraph& graph() const override { return driver_.graph(); }
    std::uint64_t steps_last_update() const override { return driver_.state().steps_last_update(); }
    const LazyDriver<LazyMcmState>& driver() const { return driver_; }

private:
    LazyDriver<LazyMcmState> driver_;
};

class LazyMwmMatcher final : public DynamicMatcher {
public:
    LazyMwmMatcher(double eps, Weight n_cap)
        : driver_(GraphOptions{n_cap}, eps, static_cast<long double>(n_cap), 1.0L) {}
    std::string name() const override { return "lazy-mwm"; }
    GuaranteeKind guarantee_kind() const override { return GuaranteeKind::Weight; }
    long double guarantee_ratio() const override { return 1.0L + driver_.state().eps(); }
    void apply(UpdateEvent& ev) override { driver_.apply(ev); }
    Matching matching() const override { return driver_.matching(); }
    const AdjacencyGraph& graph() const override { return driver_.graph(); }
    std::uint64_t steps_last_update() const override { return driver_.state().steps_last_update(); }
    const LazyDriver<WeightedLazyState>& driver() const { return driver_; }

private:
    LazyDriver<WeightedLazyState> driver_;
};

class WorstMwmMatcher final : public DynamicMatcher {
public:
    WorstMwmMatcher(double eps, Weight n_cap, double budget_const, bool unbounded = false)
        : graph_(GraphOptions{n_cap}),
          engine_(EngineConfig{eps, static_cast<long double>(n_cap), 1.0L, budget_const, unbounded}) {}
    std::string name() const override { return "worst-mwm"; }
    GuaranteeKind guarantee_kind() const override { return GuaranteeKind::Weight; }
    long double guarantee_ratio() const override { return 1.0L + engine_.config().eps; }
    void apply(UpdateEvent& ev) override {
        graph_.apply_update(ev);
        engine_.update(graph_, ev);
    }
    Matching matching() const override { return engine_.published(); }
    const AdjacencyGraph& graph() const override { return graph_; }
    std::uint64_t steps_last_update() const override { return engine_.steps_this_update(); }
    std::optional<std::uint64_t> step_budget() const override {
        if (engine_.config().unbounded) return std::nullopt;
        return engine_.budget_per_update();
    }
    const RoundState& engine() const { return engine_; }

private:
    DynamicGraph graph_;
    RoundState engine_;
};

class Scheme41Matcher final : public DynamicMatcher {
public:
    Scheme41Matcher(double eps, double alpha, Weight n_cap) : scheme_(eps, alpha, n_cap) {}
    std::string name() const override { return "mwm-3eps"; }
    GuaranteeKind guarantee_kind() const override { return GuaranteeKind::Weight; }
    long double guarantee_ratio() const override { return scheme_.plan().guarantee(); }
    void apply(UpdateEvent& ev) override { scheme_.update(ev); }
    Matching matching() const override { return scheme_.best().matching; }
    const AdjacencyGraph& graph() const override { return scheme_.graph(); }
    std::uint64_t steps_last_update() const override { return scheme_.steps_last_update(); }
    const Scheme41& scheme() const { return scheme_; }

private:
    Scheme41 scheme_;
};

class Scheme42Matcher final : public DynamicMatcher {
public:
    Scheme42Matcher(double eps, Weight n_cap) : scheme_(eps, n_cap) {}
    std::string name() const override { return "mwm-1eps"; }
    GuaranteeKind guarantee_kind() const override { return GuaranteeKind::Weight; }
    long double guarantee_ratio() const override { return scheme_.plan().guarantee(); }
    void apply(UpdateEvent& ev) override { scheme_.update(ev); }
    Matching matching() const override { return scheme_.best().matching; }
    const AdjacencyGraph& graph() const override { return scheme_.graph(); }
    std::uint64_t steps_last_update() const override { return scheme_.steps_last_update(); }
    const Scheme42& scheme() const { return scheme_; }

private:
    Scheme42 scheme_;
};

/// Which updates get an oracle check. The final update is always checked
/// under Sample.
struct CheckPolicy {
    enum class Mode { None, Every, Sample };
    Mode mode = Mode::None;
    std::size_t period = 1;

    static CheckPolicy parse(const std::string& s) {
        if (s == "none") return {Mode::None, 1};
        if (s == "every") return {Mode::Every, 1};
        if (s.rfind("sample:", 0) == 0) {
            std::size_t k = 0;
            if (!detail::parse_number(std::string_view(s).substr(7), k) || k == 0) {
                throw Error(ErrorCode::InvalidParams, "bad sample period in '" + s + "'");
            }
            return {Mode::Sample, k};
        }
        throw Error(ErrorCode::InvalidParams, "unknown check policy '" + s + "'");
    }

    bool due(std::uint64_t seq, bool last) const {
        switch (mode) {
        case Mode::None: return false;
        case Mode::Every: return true;
        case Mode::Sample: return last || seq % period == 0;
        }
        return false;
    }
};

struct MetricsRecord {
    std::uint64_t seq = 0;
    std::size_t m = 0;
    std::size_t matching_size = 0;
    Weight matching_weight = 0;
    std::uint64_t steps_executed = 0;
    bool checked = false;
    std::size_t opt_size = 0;
    Weight opt_weight = 0;
    std::optional<double> ratio;

    nlohmann::json to_json() const {
        nlohmann::json j = {{"seq", seq},
                            {"m", m},
                            {"matching_size", matching_size},
                            {"matching_weight", matching_weight},
                            {"steps_executed", steps_executed}};
        if (checked) {
            j["opt_size"] = opt_size;
            j["opt_weight"] = opt_weight;
            j["ratio"] = ratio ? nlohmann::json(*ratio) : nlohmann::json(nullptr);
        }
        return j;
    }
};

struct RunReport {
    std::size_t updates = 0;
    std::size_t checked = 0;
    std::size_t guarantee_violations = 0;
    std::size_t budget_violations = 0;
    std::uint64_t max_steps = 0;
    /// Worst optimum / maintained value over checked updates.
    double worst_ratio = 1.0;
    std::string first_violation;

    bool clean() const noexcept { return guarantee_violations == 0 && budget_violations == 0; }
};

// Relative slack for floating-point guarantee constants.
inline constexpr long double kRatioSlack = 1e-12L;

/// Feeds events to `algo`, checking at the updates `policy` selects. Stops at
/// the end of the source; violations are counted, not thrown.
class StreamRunner {
public:
    using Source = std::function<std::optional<UpdateEvent>()>;
    using Observer = std::function<void(const UpdateEvent&, const MetricsRecord&)>;

    StreamRunner(DynamicMatcher& algo, CheckPolicy policy, OracleLimits limits = {})
        : algo_(algo), policy_(policy), limits_(limits) {}

    void set_metrics(std::ostream* out) { metrics_ = out; }
    void set_observer(Observer obs) { observer_ = std::move(obs); }

    RunReport run(const Source& next) {
        RunReport report;
        std::optional<UpdateEvent> ev = next();
        while (ev) {
            std::optional<UpdateEvent> upcoming;
            UpdateEvent cur = *ev;
            if (cur.seq == 0) cur.seq = report.updates + 1;
            algo_.apply(cur);
            ++report.updates;
            upcoming = next();
            step(cur, !upcoming.has_value(), report);
            ev = std::move(upcoming);
        }
        return report;
    }

    RunReport run(const std::vector<UpdateEvent>& events) {
        std::size_t i = 0;
        return run([&]() -> std::optional<UpdateEvent> {
            if (i == events.size()) return std::nullopt;
            return events[i++];
        });
    }

private:
    void step(const UpdateEvent& ev, bool last, RunReport& report) {
        const Matching m = algo_.matching();
        MetricsRecord rec;
        rec.seq = ev.seq;
        rec.m = algo_.graph().edge_count();
        rec.matching_size = m.size();
        rec.matching_weight = m.weight();
        rec.steps_executed = algo_.steps_last_update();
        report.max_steps = std::max(report.max_steps, rec.steps_executed);

        if (auto budget = algo_.step_budget(); budget && rec.steps_executed > *budget) {
            ++report.budget_violations;
            note(report, "seq " + std::to_string(ev.seq) + ": " + std::to_string(rec.steps_executed) +
                             " steps exceed budget " + std::to_string(*budget));
        }

        if (policy_.due(ev.seq, last)) {
            rec.checked = true;
            ++report.checked;
            const bool cardinality = algo_.guarantee_kind() == GuaranteeKind::Cardinality;
            rec.opt_size = exact_mcm_oracle(algo_.graph(), limits_);
            rec.opt_weight = exact_mwm_oracle(algo_.graph(), limits_);
            const long double opt = cardinality ? rec.opt_size : rec.opt_weight;
            const long double got = cardinality ? rec.matching_size : rec.matching_weight;
            if (got > 0) {
                rec.ratio = static_cast<double>(opt / got);
            } else if (opt == 0) {
                rec.ratio = 1.0;
            }
            const bool valid = m.valid_in(algo_.graph());
            const bool within = opt <= algo_.guarantee_ratio() * got * (1 + kRatioSlack);
            const double observed = rec.ratio ? *rec.ratio : INFINITY;
            report.worst_ratio = std::max(report.worst_ratio, observed);
            if (!valid || !within) {
                ++report.guarantee_violations;
                note(report, "seq " + std::to_string(ev.seq) + ": " +
                                 (valid ? "ratio " + std::to_string(observed) + " exceeds " +
                                              std::to_string(static_cast<double>(algo_.guarantee_ratio()))
                                        : std::string("matching not valid in the current graph")));
            }
        }
        if (metrics_ != nullptr) *metrics_ << rec.to_json().dump() << '\n';
        if (observer_) observer_(ev, rec);
    }

    static void note(RunReport& report, const std::string& what) {
        if (report.first_violation.empty()) report.first_violation = what;
    }

    DynamicMatcher& algo_;
    CheckPolicy policy_;
    OracleLimits limits_;
    std::ostream* metrics_ = nullptr;
    Observer observer_;
};

struct RunConfig {
    std::string algorithm = "lazy-mcm";
    double eps = 0.2;
    Weight n_cap = 1;
    double alpha = 5.704;
    double budget_const = 64;
    CheckPolicy check;
    std::uint64_t seed = 1;
    std::string input_path;
    std::string gen_spec;
    std::string metrics_path;
};

inline const std::vector<std::string>& algorithm_names() {
    static const std::vector<std::string> names = {"lazy-mcm", "lazy-mwm", "worst-mwm", "mwm-3eps", "mwm-1eps"};
    return names;
}

inline void validate(const RunConfig& cfg) {
    if (!(cfg.eps > 0 && cfg.eps <= 0.5)) throw Error(ErrorCode::InvalidParams, "epsilon must lie in (0, 0.5]");
    if (cfg.n_cap < 1) throw Error(ErrorCode::InvalidParams, "n-cap must be at least 1");
    if (cfg.input_path.empty() == cfg.gen_spec.empty()) {
        throw Error(ErrorCode::InvalidParams, "give exactly one of --input and --gen");
    }
}

inline std::unique_ptr<DynamicMatcher> make_algorithm(const RunConfig& cfg) {
    const std::string& a = cfg.algorithm;
    if (a == "lazy-mcm") return std::make_unique<LazyMcmMatcher>(cfg.eps, cfg.n_cap);
    if (a == "lazy-mwm") return std::make_unique<LazyMwmMatcher>(cfg.eps, cfg.n_cap);
    if (a == "worst-mwm") return std::make_unique<WorstMwmMatcher>(cfg.eps, cfg.n_cap, cfg.budget_const);
    if (a == "mwm-3eps") return std::make_unique<Scheme41Matcher>(cfg.eps, cfg.alpha, cfg.n_cap);
    if (a == "mwm-1eps") return std::make_unique<Scheme42Matcher>(cfg.eps, cfg.n_cap);
    throw Error(ErrorCode::InvalidParams, "unknown algorithm '" + a + "'");
}

namespace exit_code {
inline constexpr int kClean = 0;
inline constexpr int kOther = 1;
inline constexpr int kViolation = 2;
inline constexpr int kParse = 3;
inline constexpr int kOracleLimit = 4;
}  // namespace exit_code

inline int exit_code_for(ErrorCode code) {
    switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::SelfLoop:
    case ErrorCode::DuplicateInsert:
    case ErrorCode::MissingDelete:
    case ErrorCode::WeightOutOfRange: return exit_code::kParse;
    case ErrorCode::OracleLimitExceeded: return exit_code::kOracleLimit;
    case ErrorCode::GuaranteeViolation: return exit_code::kViolation;
    default: return exit_code::kOther;
    }
}

/// Runs one configuration end to end and returns the process exit code.
/// Diagnostics go to `err`.
inline int run(const RunConfig& cfg, std::ostream& err = std::cerr) {
    try {
        validate(cfg);
        auto algo = make_algorithm(cfg);

        std::ofstream metrics_file;
        if (!cfg.metrics_path.empty()) {
            metrics_file.open(cfg.metrics_path);
            if (!metrics_file) throw Error(ErrorCode::InvalidParams, "cannot write " + cfg.metrics_path);
        }
        StreamRunner runner(*algo, cfg.check);
        if (metrics_file.is_open()) runner.set_metrics(&metrics_file);

        RunReport report;
        if (!cfg.input_path.empty()) {
            std::ifstream in(cfg.input_path);
            if (!in) throw Error(ErrorCode::ParseError, "cannot read " + cfg.input_path);
            report = runner.run(parse_stream(in));
        } else {
            WorkloadParams params = parse_workload_spec(cfg.gen_spec);
            if (cfg.gen_spec.find("seed=") == std::string::npos) params.seed = cfg.seed;
            WorkloadGenerator gen(params, [&] { return algo->matching(); });
            report = runner.run([&]() -> std::optional<UpdateEvent> {
                if (gen.done()) return std::nullopt;
                return gen.next();
            });
        }
        if (!report.clean()) {
            err << to_string(ErrorCode::GuaranteeViolation) << ": " << report.guarantee_violations
                << " guarantee and " << report.budget_violations << " budget violation(s); first at "
                << report.first_violation << '\n';
            return exit_code::kViolation;
        }
        return exit_code::kClean;
    } catch (const Error& e) {
        err << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return exit_code::kOther;
    }
}

}  // namespace dynmatch

#endif  // DYNMATCH_HARNESS_HPP_
