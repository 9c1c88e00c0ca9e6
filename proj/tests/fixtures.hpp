#pragma once

#include "balcheck/graph.hpp"

namespace fixture {

// C_n with an inscribed clique on the given rim vertices
inline balcheck::Graph rim_with_cliques(std::size_t n,
                                        const std::vector<std::vector<balcheck::Vertex>>& cliques) {
    auto g = balcheck::Graph::cycle(n);
    for (const auto& c : cliques) g.add_clique(c);
    return g;
}

inline balcheck::Graph c9_triangle() { return rim_with_cliques(9, {{0, 3, 6}}); }

inline balcheck::Graph petersen() {
    balcheck::Graph g(10);
    for (balcheck::Vertex i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

}  // namespace fixture
