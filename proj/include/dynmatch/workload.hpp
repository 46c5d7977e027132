#ifndef DYNMATCH_WORKLOAD_HPP_
#define DYNMATCH_WORKLOAD_HPP_

#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dynmatch/dynamic_graph.hpp"
#include "dynmatch/matching.hpp"
#include "dynmatch/types.hpp"

namespace dynmatch {

enum class WorkloadKind { UniformChurn, InsertHeavy, SlidingWindow, DeleteMatchedAdversary };

inline const char* to_string(WorkloadKind k) noexcept {
    switch (k) {
    case WorkloadKind::UniformChurn: return "uniform-churn";
    case WorkloadKind::InsertHeavy: return "insert-heavy";
    case WorkloadKind::SlidingWindow: return "sliding-window";
    case WorkloadKind::DeleteMatchedAdversary: return "delete-matched-adversary";
    }
    return "unknown";
}

inline WorkloadKind parse_workload_kind(const std::string& s) {
    for (auto k : {WorkloadKind::UniformChurn, WorkloadKind::InsertHeavy, WorkloadKind::SlidingWindow,
                   WorkloadKind::DeleteMatchedAdversary}) {
        if (s == to_string(k)) return k;
    }
    throw Error(ErrorCode::InvalidParams, "unknown workload kind '" + s + "'");
}

struct WorkloadParams {
    WorkloadKind kind = WorkloadKind::UniformChurn;
    std::uint32_t n = 12;
    std::size_t length = 1000;
    /// Insert probability; defaults to 0.6, or 0.9 for insert-heavy.
    std::optional<double> p_insert;
    Weight wmin = 1;
    Weight wmax = 1;
    /// Live-edge cap for sliding-window; defaults to n.
    std::optional<std::size_t> window;
    std::uint64_t seed = 1;

    double insert_probability() const {
        return p_insert.value_or(kind == WorkloadKind::InsertHeavy ? 0.9 : 0.6);
    }
    std::size_t pair_count() const { return static_cast<std::size_t>(n) * (n - 1) / 2; }

    void validate() const {
        const double p = insert_probability();
        if (n < 2) throw Error(ErrorCode::InvalidParams, "need at least 2 vertices");
        if (wmin < 1 || wmax < wmin) throw Error(ErrorCode::InvalidParams, "bad weight range");
        if (!(p >= 0 && p <= 1)) throw Error(ErrorCode::InvalidParams, "insert probability outside [0, 1]");
        const std::size_t w = window.value_or(n);
        if (w < 1 || w > pair_count()) throw Error(ErrorCode::InvalidParams, "bad window");
    }
};

/// Parses "kind:key=value,..." with keys n, len, p, wmin, wmax, window, seed.
inline WorkloadParams parse_workload_spec(const std::string& spec) {
    WorkloadParams p;
    const auto colon = spec.find(':');
    p.kind = parse_workload_kind(spec.substr(0, colon));
    if (colon != std::string::npos) {
        std::size_t pos = colon + 1;
        while (pos < spec.size()) {
            const auto comma = spec.find(',', pos);
            const std::string item = spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            pos = comma == std::string::npos ? spec.size() : comma + 1;
            if (item.empty()) continue;
            const auto eq = item.find('=');
            if (eq == std::string::npos) throw Error(ErrorCode::InvalidParams, "expected key=value in '" + item + "'");
            const std::string key = item.substr(0, eq);
            const std::string val = item.substr(eq + 1);
            try {
                if (key == "n") {
                    p.n = static_cast<std::uint32_t>(std::stoul(val));
                } else if (key == "len") {
                    p.length = std::stoull(val);
                } else if (key == "p") {
                    p.p_insert = std::stod(val);
                } else if (key == "wmin") {
                    p.wmin = std::stoll(val);
                } else if (key == "wmax") {
                    p.wmax = std::stoll(val);
                } else if (key == "window") {
                    p.window = std::stoull(val);
                } else if (key == "seed") {
                    p.seed = std::stoull(val);
                } else {
                    throw Error(ErrorCode::InvalidParams, "unknown key '" + key + "'");
                }
            } catch (const std::logic_error&) {
                throw Error(ErrorCode::InvalidParams, "bad value for '" + key + "'");
            }
        }
    }
    p.validate();
    return p;
}

/// Produces a valid update stream over vertices [0, n). The adversary kind
/// asks `matched` for the current matching of the algorithm under test and
/// deletes one of its edges whenever it chooses to delete.
class WorkloadGenerator {
public:
    using MatchingProbe = std::function<Matching()>;

    explicit WorkloadGenerator(WorkloadParams params, MatchingProbe matched = {})
        : p_(params), matched_(std::move(matched)), rng_(params.seed) {
        p_.validate();
        if (p_.kind == WorkloadKind::DeleteMatchedAdversary && !matched_) {
            throw Error(ErrorCode::InvalidParams, "adversary needs an algorithm to observe");
        }
    }

    bool done() const noexcept { return emitted_ >= p_.length; }
    std::size_t emitted() const noexcept { return emitted_; }

    UpdateEvent next() {
        UpdateEvent ev = choose();
        ev.seq = ++emitted_;
        return ev;
    }

private:
    UpdateEvent choose() {
        const bool full = live_.size() == p_.pair_count();
        if (p_.kind == WorkloadKind::SlidingWindow) {
            if (live_.size() >= p_.window.value_or(p_.n)) return remove(order_.front());
            return insert();
        }
        std::bernoulli_distribution coin(p_.insert_probability());
        if (live_.empty() || (!full && coin(rng_))) return insert();
        if (p_.kind == WorkloadKind::DeleteMatchedAdversary) {
            std::vector<Edge> targets;
            for (const Edge& e : matched_()) {
                if (index_.count(e) != 0) targets.push_back(e);
            }
            if (!targets.empty()) return remove(targets[pick(targets.size())]);
        }
        return remove(live_[pick(live_.size())]);
    }

    std::size_t pick(std::size_t count) {
        return std::uniform_int_distribution<std::size_t>(0, count - 1)(rng_);
    }

    UpdateEvent insert() {
        std::uniform_int_distribution<Vertex> vert(0, p_.n - 1);
        std::optional<Edge> chosen;
        for (int attempt = 0; attempt < 64 && !chosen; ++attempt) {
            const Vertex a = vert(rng_);
            const Vertex b = vert(rng_);
            if (a != b && index_.count(Edge(a, b)) == 0) chosen = Edge(a, b);
        }
        if (!chosen) {
            std::vector<Edge> free;
            for (Vertex a = 0; a < p_.n; ++a) {
                for (Vertex b = a + 1; b < p_.n; ++b) {
                    if (index_.count(Edge(a, b)) == 0) free.emplace_back(a, b);
                }
            }
            chosen = free[pick(free.size())];
        }
        chosen->w = std::uniform_int_distribution<Weight>(p_.wmin, p_.wmax)(rng_);
        index_.emplace(*chosen, live_.size());
        live_.push_back(*chosen);
        order_.push_back(*chosen);
        return {UpdateKind::Insert, *chosen, 0};
    }

    UpdateEvent remove(Edge e) {
        const auto it = index_.find(e);
        const std::size_t slot = it->second;
        e = live_[slot];
        index_.erase(it);
        if (slot + 1 != live_.size()) {
            live_[slot] = live_.back();
            index_[live_[slot]] = slot;
        }
        live_.pop_back();
        for (auto o = order_.begin(); o != order_.end(); ++o) {
            if (*o == e) {
                order_.erase(o);
                break;
            }
        }
        return {UpdateKind::Delete, e, 0};
    }

    WorkloadParams p_;
    MatchingProbe matched_;
    std::mt19937_64 rng_;
    std::size_t emitted_ = 0;
    std::vector<Edge> live_;
    std::map<Edge, std::size_t> index_;
    std::deque<Edge> order_;
};

/// Whole stream for the non-interactive kinds.
inline std::vector<UpdateEvent> generate_workload(const WorkloadParams& params,
                                                  WorkloadGenerator::MatchingProbe matched = {}) {
    WorkloadGenerator gen(params, std::move(matched));
    std::vector<UpdateEvent> out;
    out.reserve(params.length);
    while (!gen.done()) out.push_back(gen.next());
    return out;
}

}  // namespace dynmatch

#endif  // DYNMATCH_WORKLOAD_HPP_
