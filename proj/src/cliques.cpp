#include "balcheck/graph.hpp"

#include <algorithm>

namespace balcheck {

namespace {

struct BronKerbosch {
    const Graph& g;
    std::vector<Clique>& out;
    std::vector<Vertex> current;

    void expand(VertexSet candidates, VertexSet excluded) {
        if (candidates.none()) {
            if (excluded.none()) {
                Clique c = current;
                std::sort(c.begin(), c.end());
                out.push_back(std::move(c));
            }
            return;
        }
        // Tomita pivot: the vertex of P u X covering most of P
        Vertex pivot = 0;
        std::size_t best = 0;
        bool have = false;
        for (const VertexSet* s : {&candidates, &excluded})
            for (auto u = s->find_first(); u != VertexSet::npos; u = s->find_next(u)) {
                std::size_t c = (candidates & g.neighbors(u)).count();
                if (!have || c > best) {
                    pivot = u;
                    best = c;
                    have = true;
                }
            }
        VertexSet todo = candidates - g.neighbors(pivot);
        for (auto v = todo.find_first(); v != VertexSet::npos; v = todo.find_next(v)) {
            current.push_back(v);
            expand(candidates & g.neighbors(v), excluded & g.neighbors(v));
            current.pop_back();
            candidates.reset(v);
            excluded.set(v);
        }
    }
};

}  // namespace

std::vector<Clique> maximal_cliques(const Graph& g) {
    std::vector<Clique> out;
    if (g.order() == 0) return out;
    VertexSet all = g.empty_set();
    all.set();
    BronKerbosch bk{g, out, {}};
    bk.expand(all, g.empty_set());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace balcheck
