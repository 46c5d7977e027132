#ifndef DYNMATCH_LEVEL_COMBINER_HPP_
#define DYNMATCH_LEVEL_COMBINER_HPP_

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "dynmatch/matching.hpp"
#include "dynmatch/types.hpp"

namespace dynmatch {

/// Per-level matchings keyed by level index (may be negative).
using LeveledMatchings = std::map<int, Matching>;

/// Weight charged for an edge at a level; true weight unless overridden.
using ChargeWeight = std::function<long double(const Edge&, int level)>;

struct ChargeEntry {
    Edge edge;
    int level = 0;
    /// The edge itself followed by every lower-level edge sharing an endpoint.
    std::vector<std::pair<int, Edge>> members;
    long double total = 0;
    long double own = 0;
};

struct ChargeReport {
    std::vector<ChargeEntry> entries;
    /// Every per-level edge is either combined or charged to a combined edge.
    bool covers_all = true;
    /// Largest number of members of one charge set drawn from a single level.
    std::size_t max_per_level = 0;
};

struct CombineResult {
    Matching matching;
    ChargeReport report;
};

/// Greedy union from the highest level down, keeping an edge only if both
/// endpoints are still free. The charge report is built when requested.
inline CombineResult combine(const LeveledMatchings& lm, bool with_report = false,
                             const ChargeWeight& charge = {}) {
    CombineResult out;
    std::map<Edge, int> level_of;
    for (auto it = lm.rbegin(); it != lm.rend(); ++it) {
        for (const Edge& e : it->second) {
            if (out.matching.add(e)) level_of.emplace(e, it->first);
        }
    }
    if (!with_report) return out;

    auto weight_of = [&](const Edge& e, int level) {
        return charge ? charge(e, level) : static_cast<long double>(e.w);
    };
    std::map<std::pair<int, Edge>, bool> charged;
    for (const Edge& e : out.matching) {
        ChargeEntry entry;
        entry.edge = e;
        entry.level = level_of.at(e);
        entry.own = weight_of(e, entry.level);
        entry.members.emplace_back(entry.level, e);
        entry.total = entry.own;
        for (auto it = lm.begin(); it != lm.end() && it->first < entry.level; ++it) {
            std::size_t here = 0;
            for (const Edge& f : it->second) {
                if (!f.shares_endpoint(e)) continue;
                entry.members.emplace_back(it->first, f);
                entry.total += weight_of(f, it->first);
                charged[{it->first, f}] = true;
                ++here;
            }
            out.report.max_per_level = std::max(out.report.max_per_level, here);
        }
        out.report.entries.push_back(std::move(entry));
    }
    for (const auto& [level, m] : lm) {
        for (const Edge& f : m) {
            const bool kept = level_of.count(f) != 0 && level_of.at(f) == level && out.matching.contains(f);
            if (!kept && charged.count({level, f}) == 0) out.report.covers_all = false;
        }
    }
    return out;
}

/// Builds per-level matchings from raw edge lists, throwing
/// InvalidLevelMatching if a level's edges are not a matching.
inline LeveledMatchings leveled_from_edges(const std::map<int, std::vector<Edge>>& raw) {
    LeveledMatchings out;
    for (const auto& [level, edges] : raw) out.emplace(level, Matching::from_edges(edges));
    return out;
}

}  // namespace dynmatch

#endif  // DYNMATCH_LEVEL_COMBINER_HPP_
