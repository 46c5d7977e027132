#ifndef DYNMATCH_MWM_SCHEMES_HPP_
#define DYNMATCH_MWM_SCHEMES_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dynmatch/dynamic_graph.hpp"
#include "dynmatch/lazy_mcm.hpp"
#include "dynmatch/level_combiner.hpp"
#include "dynmatch/matching.hpp"
#include "dynmatch/weighted_lazy.hpp"

namespace dynmatch {

using BigInt = boost::multiprecision::cpp_int;

/// Positive rational num/den in lowest terms.
struct Rational {
    std::int64_t num = 1;
    std::int64_t den = 1;

    /// Nearest rational with denominator `scale`, reduced.
    static Rational approximate(long double x, std::int64_t scale = 1'000'000'000) {
        const auto n = static_cast<std::int64_t>(std::llround(x * scale));
        if (n <= 0) throw Error(ErrorCode::InvalidParams, "value must be positive");
        const std::int64_t g = std::gcd(n, scale);
        return {n / g, scale / g};
    }

    long double value() const { return static_cast<long double>(num) / den; }
};

inline int floor_div(int a, int b) {
    const int q = a / b;
    return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

inline int floor_mod(int a, int b) { return a - floor_div(a, b) * b; }

namespace detail {

// base^(e/k) <= w for base = p/q, evaluated exactly as base^e <= w^k.
inline bool power_at_most(const Rational& base, int e, int k, Weight w) {
    const BigInt wk = boost::multiprecision::pow(BigInt(w), static_cast<unsigned>(k));
    if (e >= 0) {
        const auto ue = static_cast<unsigned>(e);
        return boost::multiprecision::pow(BigInt(base.num), ue) <= wk * boost::multiprecision::pow(BigInt(base.den), ue);
    }
    const auto ue = static_cast<unsigned>(-e);
    return boost::multiprecision::pow(BigInt(base.den), ue) <= wk * boost::multiprecision::pow(BigInt(base.num), ue);
}

}  // namespace detail

struct LevelAssignment {
    int level = 0;
    long double rounded = 1;
};

/// Level l with alpha^(l + r) <= w < alpha^(l + r + 1), and the rounded
/// weight alpha^(l + r). Floating-point version for arbitrary offsets.
inline LevelAssignment assign_level_41(Weight w, long double r, long double alpha) {
    if (w < 1 || !(r >= 0 && r < 1) || !(alpha > 1)) throw Error(ErrorCode::InvalidParams, "bad level query");
    const long double x = static_cast<long double>(w);
    int l = static_cast<int>(std::floor(std::log(x) / std::log(alpha) - r));
    while (std::pow(alpha, l + r) > x) --l;
    while (std::pow(alpha, l + 1 + r) <= x) ++l;
    return {l, std::pow(alpha, l + r)};
}

/// Geometric levels with k evenly spaced offsets r(j) = (j - 1) / k.
class RoundingPlan {
public:
    RoundingPlan(double eps, double alpha) : eps_(eps), alpha_(alpha), exact_alpha_(Rational::approximate(alpha, 1'000'000)) {
        check_epsilon(eps);
        if (!(alpha > 1)) throw Error(ErrorCode::InvalidParams, "alpha must exceed 1");
        k_ = static_cast<int>(std::ceil(std::log(static_cast<long double>(alpha)) / std::log1p(static_cast<long double>(eps)) - 1e-12L));
        k_ = std::max(k_, 1);
    }

    double eps() const noexcept { return eps_; }
    double alpha() const noexcept { return alpha_; }
    int copies() const noexcept { return k_; }
    long double offset(int j) const { return static_cast<long double>(j - 1) / k_; }

    /// Exact level of w for copy j in 1..copies().
    int level(Weight w, int j) const {
        if (w < 1) throw Error(ErrorCode::WeightOutOfRange, "weight below 1");
        int l = assign_level_41(w, offset(j), exact_alpha_.value()).level;
        while (!detail::power_at_most(exact_alpha_, l * k_ + j - 1, k_, w)) --l;
        while (detail::power_at_most(exact_alpha_, (l + 1) * k_ + j - 1, k_, w)) ++l;
        return l;
    }

    long double rounded(int level, int j) const { return std::pow(exact_alpha_.value(), level + offset(j)); }

    /// Worst ratio of optimum to the best combined copy.
    long double guarantee() const {
        const long double a = exact_alpha_.value();
        const long double e = eps_;
        return (1 + e) / (1 - e) * (a + 1) * a * std::log(a) / ((a - 1) * (a - 1));
    }

    /// Bound on a combined edge's charge relative to its rounded weight.
    long double charge_factor() const {
        const long double a = exact_alpha_.value();
        return (a + 1) / (a - 1);
    }

private:
    double eps_;
    double alpha_;
    Rational exact_alpha_;
    int k_ = 1;
};

/// Buckets [eps^-b, eps^-(b+1)) grouped into copies that each drop one
/// residue class of buckets modulo C = ceil(1 / eps).
class BucketPlan {
public:
    explicit BucketPlan(double eps) : eps_(eps), exact_(Rational::approximate(eps)) {
        check_epsilon(eps);
        c_ = static_cast<int>((exact_.den + exact_.num - 1) / exact_.num);
    }

    double eps() const noexcept { return eps_; }
    int copies() const noexcept { return c_; }

    /// Largest b >= 0 with eps^-b <= w, by exact comparison den^b <= w * num^b.
    int bucket(Weight w) const {
        if (w < 1) throw Error(ErrorCode::WeightOutOfRange, "weight below 1");
        int b = 0;
        BigInt lhs = exact_.den;
        BigInt rhs = BigInt(w) * exact_.num;
        while (lhs <= rhs) {
            ++b;
            lhs *= exact_.den;
            rhs *= exact_.num;
        }
        return b;
    }

    bool removed(int b, int copy) const { return floor_mod(b, c_) == copy; }

    /// Level of bucket b in copy `copy`; b must survive in that copy.
    int level(int b, int copy) const { return floor_div(b - copy - 1, c_); }

    /// Smallest weight a level can hold: eps^-(level * C + copy + 1).
    long double unit(int level, int copy) const {
        return std::pow(1.0L / exact_.value(), level * c_ + copy + 1);
    }

    /// Largest to smallest weight ratio inside one level.
    long double local_ratio() const { return std::pow(1.0L / exact_.value(), c_ - 1); }

    long double guarantee() const {
        const long double e = eps_;
        return (1 + 7 * e) / (1 - e);
    }

    long double charge_factor() const { return 1 + 3 * static_cast<long double>(eps_); }

private:
    double eps_;
    Rational exact_;
    int c_ = 1;
};

inline int bucket_of(Weight w, double eps) { return BucketPlan(eps).bucket(w); }

/// Subgraph of g with every edge whose bucket is dropped by `copy` removed.
inline StaticGraph bucket_copy(const AdjacencyGraph& g, const BucketPlan& plan, int copy) {
    StaticGraph out;
    g.for_each_edge([&](const Edge& e) {
        if (!plan.removed(plan.bucket(e.w), copy)) out.insert(e);
    });
    return out;
}

struct BestCopy {
    Matching matching;
    int copy = 0;
    std::vector<CombineResult> combined;
};

namespace detail {

// Copies of one base graph, each partitioned into independently maintained
// level slices. Router maps (weight, copy) to a level or nothing.
template <class Slice>
class CopyEnsemble {
public:
    explicit CopyEnsemble(GraphOptions options, int copies) : graph_(options), copies_(copies) {}

    const DynamicGraph& graph() const noexcept { return graph_; }
    int copies() const noexcept { return static_cast<int>(copies_.size()); }
    const std::map<int, std::unique_ptr<Slice>>& slices(int copy) const { return copies_.at(copy); }
    std::uint64_t steps_last_update() const noexcept { return steps_; }

    template <class Route, class Make>
    void apply(UpdateEvent& ev, Route&& route, Make&& make) {
        graph_.apply_update(ev);
        steps_ = 0;
        for (int c = 0; c < copies(); ++c) {
            const auto level = route(ev.edge.w, c);
            if (!level) continue;
            auto& slot = copies_[c][*level];
            if (!slot) slot = make(*level, c);
            UpdateEvent local = ev;
            slot->apply(local);
            steps_ += slot->state().steps_last_update();
        }
    }

    LeveledMatchings levels(int copy) const {
        LeveledMatchings out;
        for (const auto& [level, slice] : copies_.at(copy)) {
            if (!slice->matching().empty()) out.emplace(level, slice->matching());
        }
        return out;
    }

private:
    DynamicGraph graph_;
    std::vector<std::map<int, std::unique_ptr<Slice>>> copies_;
    std::uint64_t steps_ = 0;
};

}  // namespace detail

/// Weighted matching from per-level cardinality matchers over k rounding
/// offsets; the best combined copy is within guarantee() of optimal.
class Scheme41 {
public:
    using Slice = LazyDriver<LazyMcmState>;

    Scheme41(double eps, double alpha = 5.704, Weight n_cap = std::numeric_limits<Weight>::max())
        : plan_(eps, alpha), ens_(GraphOptions{n_cap}, plan_.copies()) {}

    const RoundingPlan& plan() const noexcept { return plan_; }
    const DynamicGraph& graph() const noexcept { return ens_.graph(); }
    std::uint64_t steps_last_update() const noexcept { return ens_.steps_last_update(); }
    const std::map<int, std::unique_ptr<Slice>>& slices(int copy) const { return ens_.slices(copy); }

    void update(UpdateEvent& ev) {
        ens_.apply(
            ev, [&](Weight w, int c) { return std::optional<int>(plan_.level(w, c + 1)); },
            [&](int, int) {
                auto s = std::make_unique<Slice>(GraphOptions{std::numeric_limits<Weight>::max()}, plan_.eps());
                s->state().set_logging(false);
                return s;
            });
    }

    /// Combined matching of every copy; charges use rounded weights.
    std::vector<CombineResult> combine_copies(bool with_report) const {
        std::vector<CombineResult> out;
        for (int c = 0; c < plan_.copies(); ++c) {
            const int j = c + 1;
            out.push_back(combine(ens_.levels(c), with_report,
                                  [this, j](const Edge&, int level) { return plan_.rounded(level, j); }));
        }
        return out;
    }

    BestCopy best(bool with_report = false) const { return pick(combine_copies(with_report)); }

private:
    static BestCopy pick(std::vector<CombineResult> all) {
        BestCopy out;
        for (int c = 0; c < static_cast<int>(all.size()); ++c) {
            if (c == 0 || all[c].matching.weight() > out.matching.weight()) {
                out.matching = all[c].matching;
                out.copy = c;
            }
        }
        out.combined = std::move(all);
        return out;
    }

    friend class Scheme42;

    RoundingPlan plan_;
    detail::CopyEnsemble<Slice> ens_;
};

inline void scheme41_update(Scheme41& ens, UpdateEvent& ev) { ens.update(ev); }
inline Matching scheme41_best(const Scheme41& ens) { return ens.best().matching; }

/// Weighted matching from per-level weighted matchers over bucket-dropping
/// copies; the best combined copy is within guarantee() of optimal.
class Scheme42 {
public:
    using Slice = LazyDriver<WeightedLazyState>;

    explicit Scheme42(double eps, Weight n_cap = std::numeric_limits<Weight>::max())
        : plan_(eps), ens_(GraphOptions{n_cap}, plan_.copies()) {}

    const BucketPlan& plan() const noexcept { return plan_; }
    const DynamicGraph& graph() const noexcept { return ens_.graph(); }
    std::uint64_t steps_last_update() const noexcept { return ens_.steps_last_update(); }
    const std::map<int, std::unique_ptr<Slice>>& slices(int copy) const { return ens_.slices(copy); }

    void update(UpdateEvent& ev) {
        ens_.apply(
            ev,
            [&](Weight w, int c) -> std::optional<int> {
                const int b = plan_.bucket(w);
                if (plan_.removed(b, c)) return std::nullopt;
                return plan_.level(b, c);
            },
            [&](int level, int c) {
                auto s = std::make_unique<Slice>(GraphOptions{std::numeric_limits<Weight>::max()}, plan_.eps(),
                                                 plan_.local_ratio(), plan_.unit(level, c));
                s->state().set_logging(false);
                return s;
            });
    }

    std::vector<CombineResult> combine_copies(bool with_report) const {
        std::vector<CombineResult> out;
        for (int c = 0; c < plan_.copies(); ++c) out.push_back(combine(ens_.levels(c), with_report));
        return out;
    }

    BestCopy best(bool with_report = false) const { return Scheme41::pick(combine_copies(with_report)); }

private:
    BucketPlan plan_;
    detail::CopyEnsemble<Slice> ens_;
};

inline void scheme42_update(Scheme42& ens, UpdateEvent& ev) { ens.update(ev); }
inline Matching scheme42_best(const Scheme42& ens) { return ens.best().matching; }

}  // namespace dynmatch

#endif  // DYNMATCH_MWM_SCHEMES_HPP_
