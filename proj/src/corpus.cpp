#include "balcheck/corpus.hpp"

#include <algorithm>
#include <stdexcept>

namespace balcheck {

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::vector<std::vector<Vertex>> clique_positions(const Multisun& m) {
    std::vector<std::vector<Vertex>> out;
    for (const auto& c : m.cliques()) {
        std::vector<Vertex> pos;
        for (auto v : c) pos.push_back(m.rim_position(v));
        std::sort(pos.begin(), pos.end());
        out.push_back(pos);
    }
    return out;
}

// one new rim vertex after each listed rim position
std::optional<Multisun> insert_rim_vertices(const Multisun& m, std::vector<std::size_t> after) {
    std::sort(after.begin(), after.end());
    auto shift = [&](std::size_t q) {
        return q + static_cast<std::size_t>(std::lower_bound(after.begin(), after.end(), q) - after.begin());
    };
    auto cliques = clique_positions(m);
    for (auto& c : cliques)
        for (auto& q : c) q = shift(q);
    auto rec = multisun_on_rim(m.order() + after.size(), cliques);
    if (!rec) return std::nullopt;
    return std::move(*rec.multisun);
}

Multisun random_subdivided_standard(std::mt19937_64& rng) {
    auto w = random_s_word(uniform(rng, 2, 3), 2 * uniform(rng, 1, 3) + 1, 3, rng);
    Multisun m = standard_multisun(w);
    auto segs = rim_segments(m);
    std::vector<std::size_t> pairs(segs.size(), 0);
    for (std::size_t t = uniform(rng, 0, 2); t > 0; --t) pairs[uniform(rng, 0, segs.size() - 1)] += uniform(rng, 1, 2);
    // vertex ids of the standard multisun stay valid under subdivision
    for (std::size_t k = 0; k < segs.size(); ++k)
        if (pairs[k] > 0) m = even_subdivide(m, segs[k].vertices[0], segs[k].vertices[1], 2 * pairs[k]);
    return m;
}

std::optional<Multisun> odd_perturbed_standard(std::mt19937_64& rng) {
    Multisun m = standard_multisun(random_s_word(uniform(rng, 2, 3), 2 * uniform(rng, 1, 3) + 1, 3, rng));
    std::size_t i = uniform(rng, 0, m.order() - 1), j = uniform(rng, 0, m.order() - 1);
    if (i == j) return std::nullopt;
    return insert_rim_vertices(m, {i, j});
}

std::optional<Multisun> hub_avoiding(std::mt19937_64& rng) {
    Multisun m = standard_multisun(random_s_word(uniform(rng, 2, 3), 2 * uniform(rng, 1, 3) + 1, 3, rng));
    if (!m.hub()) return std::nullopt;
    auto cliques = clique_positions(m);
    auto& c = cliques[uniform(rng, 0, cliques.size() - 1)];
    const std::size_t hub = m.rim_position(*m.hub());
    c.erase(std::remove(c.begin(), c.end(), hub), c.end());
    if (c.size() < 3) return std::nullopt;
    auto rec = multisun_on_rim(m.order(), cliques);
    if (!rec) return std::nullopt;
    return std::move(*rec.multisun);
}

}  // namespace

Graph random_diamond_free(std::size_t n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    while (auto d = find_diamond(g)) {
        auto [a, b, c, e] = *d;
        const std::array<Edge, 5> edges{Edge{a, b}, Edge{a, c}, Edge{a, e}, Edge{b, c}, Edge{b, e}};
        auto [x, y] = edges[uniform(rng, 0, 4)];
        g.remove_edge(x, y);
    }
    return g;
}

CyclicWord random_s_word(std::size_t p, std::size_t s, std::size_t max_exponent,
                         std::mt19937_64& rng) {
    if (p < 2 || s % 2 == 0 || s < p) throw std::invalid_argument("need p >= 2 and odd s >= p");
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<std::size_t> letters(s), exps(s);
        for (std::size_t h = 0; h < s; ++h) {
            do letters[h] = uniform(rng, 0, p - 1);
            while (h > 0 && letters[h] == letters[h - 1]);
            exps[h] = uniform(rng, 1, max_exponent);
        }
        std::vector<std::size_t> sums(p, 0);
        for (std::size_t h = 0; h < s; ++h) sums[letters[h]] += exps[h];
        if (std::count(sums.begin(), sums.end(), 0) > 0) continue;
        for (std::size_t x = 0; x < p; ++x) {
            if (sums[x] % 2 == 0) continue;
            std::vector<std::size_t> runs;
            for (std::size_t h = 0; h < s; ++h)
                if (letters[h] == x) runs.push_back(h);
            ++exps[runs[uniform(rng, 0, runs.size() - 1)]];
        }
        std::vector<Run> word{{Letter::sigma(), 1}};
        for (std::size_t h = 0; h < s; ++h) {
            if (h > 0) word.push_back({Letter::epsilon(), 1});
            word.push_back({Letter::proper(letters[h]), exps[h]});
        }
        auto c = canonicalize(LinearWord(word));
        if (is_s_word(c)) return c;
    }
    throw std::runtime_error("could not draw an s-word");
}

Multisun random_inscribed_multisun(std::mt19937_64& rng) {
    while (true) {
        const std::size_t n = 2 * uniform(rng, 3, 12) + 1;
        const std::size_t p = uniform(rng, 1, 3);
        const bool shared = uniform(rng, 0, 1) == 1;
        std::vector<std::vector<Vertex>> cliques;
        for (std::size_t k = 0; k < p; ++k) {
            std::vector<Vertex> c;
            if (shared) c.push_back(0);
            const std::size_t size = uniform(rng, 3, 5);
            for (int tries = 0; c.size() < size && tries < 50; ++tries) {
                Vertex v = uniform(rng, 0, n - 1);
                bool ok = std::none_of(c.begin(), c.end(), [&](Vertex u) {
                    return u == v || (u + 1) % n == v || (v + 1) % n == u;
                });
                if (ok) c.push_back(v);
            }
            if (c.size() < 3) break;
            std::sort(c.begin(), c.end());
            cliques.push_back(c);
        }
        if (cliques.size() != p) continue;
        auto rec = multisun_on_rim(n, cliques);
        if (rec) return std::move(*rec.multisun);
    }
}

std::vector<Multisun> random_multisuns(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Multisun> out;
    while (out.size() < count) {
        std::optional<Multisun> m;
        switch (out.size() % 4) {
        case 0: m = random_subdivided_standard(rng); break;
        case 1: m = random_inscribed_multisun(rng); break;
        case 2: m = odd_perturbed_standard(rng); break;
        case 3: m = hub_avoiding(rng); break;
        }
        if (m) out.push_back(std::move(*m));
    }
    return out;
}

std::vector<Graph> random_diamond_free_corpus(std::size_t count, std::size_t max_order,
                                              std::uint64_t seed) {
    if (max_order < 5) throw std::invalid_argument("max_order must be at least 5");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> density(0.15, 0.55);
    std::vector<Graph> out;
    while (out.size() < count) {
        if (out.size() % 3 != 2) {
            out.push_back(random_diamond_free(uniform(rng, 5, max_order), density(rng), rng));
            continue;
        }
        // an odd hole or the 9-vertex sunoid with random extra vertices attached
        Graph g = max_order >= 9 && uniform(rng, 0, 1) == 1
                      ? multisun_on_rim(9, {{0, 3, 6}}).multisun->graph()
                      : Graph::cycle(2 * uniform(rng, 2, std::min<std::size_t>(4, (max_order - 1) / 2)) + 1);
        const std::size_t base = g.order();
        for (std::size_t extra = uniform(rng, 0, max_order - base); extra > 0; --extra) {
            Vertex w = g.add_vertex();
            for (Vertex u = 0; u < w; ++u)
                if (uniform(rng, 0, 3) == 0) g.add_edge(u, w);
        }
        while (auto d = find_diamond(g)) g.remove_edge((*d)[0], (*d)[1]);
        out.push_back(g);
    }
    return out;
}

}  // namespace balcheck
