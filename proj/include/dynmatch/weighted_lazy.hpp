#ifndef DYNMATCH_WEIGHTED_LAZY_HPP_
#define DYNMATCH_WEIGHTED_LAZY_HPP_

#include <string>

#include "dynmatch/lazy_mcm.hpp"

namespace dynmatch {

/// Weighted flavor of the lazy matcher for one weight slice [unit, unit * n_cap].
/// Rebuilds use the weight-ranked core and an eps/4 weighted matcher; the
/// window shrinks with the slice's weight spread.
class WeightedLazyState : public LazyMatcher {
public:
    explicit WeightedLazyState(double eps, long double n_cap = 1, long double unit = 1)
        : LazyMatcher(Config{eps, true, unit, n_cap}) {}

    void check_update(const UpdateEvent& ev) const {
        if (!ev.is_insert()) return;
        const auto w = static_cast<long double>(ev.edge.w);
        const Config& c = config();
        if (w < c.unit * (1 - kSlack) || w > c.unit * c.n_cap * (1 + kSlack)) {
            throw Error(ErrorCode::WeightOutOfRange, to_string(ev.edge) + " outside the slice range");
        }
    }

    void update(const DynamicGraph& g, CoverState& cov, const UpdateEvent& ev) {
        check_update(ev);
        LazyMatcher::update(g, cov, ev);
    }

private:
    // Relative tolerance for slice bounds that are not exactly representable.
    static constexpr long double kSlack = 1e-12L;
};

inline void weighted_lazy_update(WeightedLazyState& st, const DynamicGraph& g, CoverState& cov,
                                 const UpdateEvent& ev) {
    st.update(g, cov, ev);
}

inline const Matching& current_weighted_matching(const WeightedLazyState& st) { return st.matching(); }

}  // namespace dynmatch

#endif  // DYNMATCH_WEIGHTED_LAZY_HPP_
