// Builds a small weighted graph, matches it statically, then replays a few
// updates through the lazy weighted matcher.

#include <iostream>

#include "dynmatch/dynmatch.hpp"

int main() {
    using namespace dynmatch;

    const StaticGraph g({Edge(0, 1, 4), Edge(1, 2, 9), Edge(2, 3, 4), Edge(3, 0, 1), Edge(4, 5, 2)});
    const Matching m = approx_mwm(g, 0.1);
    std::cout << "static: " << m.size() << " edges, weight " << m.weight() << " (optimum "
              << exact_mwm_oracle(g) << ")\n";

    const CoverResult cover = approx_cover(g);
    std::cout << "cover of " << cover.cover.size() << " vertices\n";

    LazyDriver<WeightedLazyState> driver(GraphOptions{9}, 0.25, 9.0L, 1.0L);
    for (const char* line : {"+ 0 1 4", "+ 1 2 9", "+ 2 3 4", "- 1 2", "+ 4 5 2"}) {
        UpdateEvent ev;
        parse_event_line(line, 1, ev);
        driver.apply(ev);
        std::cout << format_event(ev) << " -> weight " << driver.matching().weight() << '\n';
    }
    return 0;
}
