#include "balcheck/recognition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "balcheck/dyck.hpp"

namespace balcheck {

std::string to_string(Method m) {
    switch (m) {
    case Method::Oracle: return "oracle";
    case Method::Algorithm: return "algorithm";
    case Method::Characterization: return "characterization";
    }
    return "?";
}

namespace {

std::vector<std::size_t> all_rows(const ZeroOneMatrix& a) {
    std::vector<std::size_t> r(a.rows());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = i;
    return r;
}

std::string join(const std::vector<std::size_t>& xs) {
    std::string s;
    for (auto x : xs) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
}

void require_diamond_free(const Graph& g) {
    if (auto d = find_diamond(g))
        throw std::invalid_argument("graph has a diamond on vertices " +
                                    join({(*d)[0], (*d)[1], (*d)[2], (*d)[3]}));
}

// odd cycle submatrix of a using only the given columns
std::optional<OddCycleCertificate> certificate_on(const ZeroOneMatrix& a,
                                                  const std::vector<std::size_t>& cols) {
    auto cert = min_odd_cycle(submatrix(a, all_rows(a), cols));
    if (!cert) return std::nullopt;
    for (auto& c : cert->cols) c = cols[c];
    return cert;
}

bool odd_cycle_graph(const Graph& g) {
    if (g.order() < 5 || g.order() % 2 == 0 || !is_connected(g)) return false;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

std::vector<Vertex> cycle_order(const Graph& g) {
    std::vector<Vertex> cyc{0};
    Vertex prev = 0, cur = g.neighbors(0).find_first();
    while (cur != 0) {
        cyc.push_back(cur);
        VertexSet nb = g.neighbors(cur);
        nb.reset(prev);
        prev = cur;
        cur = nb.find_first();
    }
    return cyc;
}

std::optional<SunoidWitness> as_sunoid(const Graph& g) {
    auto rec = recognize_multisun(g);
    if (!rec) return std::nullopt;
    auto w = s_word_of_multisun(*rec.multisun);
    if (!w || !is_sunword(*w)) return std::nullopt;
    std::vector<Vertex> ids(g.order());
    for (Vertex v = 0; v < ids.size(); ++v) ids[v] = v;
    return SunoidWitness{ids, *rec.multisun, *w};
}

Verdict oracle_route(const ZeroOneMatrix& a) {
    Verdict v{true, Method::Oracle, {}, {}, {}, {}, {}};
    if (auto cert = min_odd_cycle(a)) {
        v.holds = false;
        v.certificate = cert;
        v.detail = "odd cycle submatrix of order " + std::to_string(cert->order());
    } else {
        v.detail = "no odd cycle submatrix";
    }
    return v;
}

Verdict algorithm_route(const ZeroOneMatrix& a) {
    Verdict v{true, Method::Algorithm, {}, {}, {}, {}, {}};
    if (auto tri = find_triangle_submatrix(a)) {
        v.holds = false;
        v.certificate = tri;
        v.detail = "triangle submatrix";
        return v;
    }
    auto unbalanced_by_hole = [&](const std::vector<std::size_t>& allowed, const Hole& h) {
        v.holds = false;
        v.odd_hole = h;
        v.certificate = certificate_from_hole(a, allowed, h.vertices);
        if (!v.certificate) throw std::logic_error("odd hole without a covering odd cycle");
    };
    if (auto h = find_hole(intersection_graph(a), Parity::Odd, 5)) {
        unbalanced_by_hole(all_rows(a), *h);
        v.detail = "odd hole of length " + std::to_string(h->length()) + " in the intersection graph";
        return v;
    }
    for (std::size_t j = 0; j < a.cols(); ++j) {
        std::vector<std::size_t> through;
        for (std::size_t r = 0; r < a.rows(); ++r)
            if (a.at(r, j)) through.push_back(r);
        if (through.size() < 3) continue;
        for (std::size_t x = 0; x < through.size(); ++x)
            for (std::size_t y = x + 1; y < through.size(); ++y) {
                std::vector<std::size_t> allowed;
                for (std::size_t r = 0; r < a.rows(); ++r)
                    if (!a.at(r, j) || r == through[x] || r == through[y]) allowed.push_back(r);
                auto h = find_hole(intersection_graph(select_rows(a, allowed)), Parity::Odd, 5);
                if (!h) continue;
                unbalanced_by_hole(allowed, *h);
                v.hole_rows = allowed;
                v.detail = "odd hole of length " + std::to_string(h->length()) + " after keeping rows " +
                           std::to_string(through[x]) + " and " + std::to_string(through[y]) +
                           " through column " + std::to_string(j);
                return v;
            }
    }
    v.detail = "no odd hole in any reduced intersection graph";
    return v;
}

constexpr std::size_t kSunoidSearchLimit = 22;

Verdict characterization_route(const ZeroOneMatrix& a, const Graph& g) {
    Verdict v{true, Method::Characterization, {}, {}, {}, {}, {}};
    if (auto h = find_hole(g, Parity::Odd, 5)) {
        v.holds = false;
        v.odd_hole = h;
        v.certificate = certificate_on(a, h->vertices);
        v.detail = "odd hole of length " + std::to_string(h->length());
        return v;
    }
    const std::size_t n = g.order();
    if (n > kSunoidSearchLimit)
        throw std::invalid_argument("sunoid search is limited to " +
                                    std::to_string(kSunoidSearchLimit) + " vertices");
    // smallest sunoid first; a sunoid has at least nine vertices
    for (std::size_t k = 9; k <= n; k += 2) {
        std::vector<bool> pick(n, false);
        std::fill(pick.end() - static_cast<std::ptrdiff_t>(k), pick.end(), true);
        do {
            VertexSet s(n);
            for (std::size_t i = 0; i < n; ++i)
                if (pick[i]) s.set(i);
            bool degrees_ok = true;
            for (auto u = s.find_first(); u != VertexSet::npos && degrees_ok; u = s.find_next(u))
                degrees_ok = (g.neighbors(u) & s).count() >= 2;
            if (!degrees_ok) continue;
            auto sub = induced_subgraph(g, s);
            auto w = as_sunoid(sub.graph);
            if (!w) continue;
            w->vertices = sub.original;
            v.holds = false;
            v.certificate = certificate_on(a, sub.original);
            v.detail = "sunoid of order " + std::to_string(k);
            v.sunoid = std::move(w);
            return v;
        } while (std::next_permutation(pick.begin(), pick.end()));
    }
    v.detail = "no odd hole and no sunoid";
    return v;
}

Verdict route(const ZeroOneMatrix& a, const Graph& g, Method method) {
    switch (method) {
    case Method::Oracle: return oracle_route(a);
    case Method::Algorithm: return algorithm_route(a);
    case Method::Characterization: return characterization_route(a, g);
    }
    throw std::invalid_argument("unknown method");
}

}  // namespace

bool is_minimally_unbalanced_oracle(const Graph& g) {
    if (is_balanced(clique_matrix(g))) return false;
    for (Vertex v = 0; v < g.order(); ++v) {
        VertexSet keep(g.order());
        keep.set();
        keep.reset(v);
        if (!is_balanced(clique_matrix(induced_subgraph(g, keep).graph))) return false;
    }
    return true;
}

Verdict is_minimally_unbalanced_df(const Graph& g) {
    require_diamond_free(g);
    Verdict v{false, Method::Characterization, {}, {}, {}, {}, {}};
    if (odd_cycle_graph(g)) {
        v.holds = true;
        v.odd_hole = Hole{cycle_order(g)};
        v.certificate = min_odd_cycle(clique_matrix(g));
        v.detail = "odd hole";
        return v;
    }
    auto rec = recognize_multisun(g);
    if (!rec) {
        v.detail = "neither an odd hole nor a multisun: " + rec.detail;
        return v;
    }
    auto nc = check_n_conditions(*rec.multisun);
    if (!nc.all_pass()) {
        v.detail = "multisun violates N-" + std::to_string(nc.first_failure());
        return v;
    }
    auto w = *s_word_of_multisun(*rec.multisun);
    if (!is_sunword(w)) {
        v.detail = "s-word is not a sunword";
        return v;
    }
    v.holds = true;
    v.sunoid = as_sunoid(g);
    v.certificate = min_odd_cycle(clique_matrix(g));
    v.detail = "sunoid";
    return v;
}

Verdict balanced_df(const Graph& g, Method method) {
    require_diamond_free(g);
    return route(clique_matrix(g), g, method);
}

Verdict balanced_linear(const ZeroOneMatrix& a, Method method) {
    if (!is_linear(a)) throw std::invalid_argument("matrix is not linear");
    if (method != Method::Oracle) {
        if (auto tri = find_triangle_submatrix(a)) {
            Verdict v{false, method, {}, {}, {}, tri, "triangle submatrix"};
            return v;
        }
    }
    return route(a, intersection_graph(a), method);
}

std::size_t tau_c(const Graph& g) {
    auto cliques = maximal_cliques(g);
    std::vector<VertexSet> sets;
    for (const auto& c : cliques) {
        VertexSet s(g.order());
        for (auto v : c) s.set(v);
        sets.push_back(s);
    }
    std::size_t best = g.order();
    VertexSet chosen(g.order());
    std::function<void(std::size_t)> go = [&](std::size_t depth) {
        // pairwise disjoint unhit cliques bound the remaining cost from below
        VertexSet used(g.order());
        std::size_t bound = 0;
        const VertexSet* branch = nullptr;
        for (const auto& s : sets) {
            if (s.intersects(chosen)) continue;
            if (!branch || s.count() < branch->count()) branch = &s;
            if (!s.intersects(used)) {
                used |= s;
                ++bound;
            }
        }
        if (!branch) {
            best = std::min(best, depth);
            return;
        }
        if (depth + bound >= best) return;
        VertexSet options = *branch;
        for (auto v = options.find_first(); v != VertexSet::npos; v = options.find_next(v)) {
            chosen.set(v);
            go(depth + 1);
            chosen.reset(v);
        }
    };
    go(0);
    return best;
}

std::size_t alpha_c(const Graph& g) {
    auto cliques = maximal_cliques(g);
    std::vector<VertexSet> sets;
    for (const auto& c : cliques) {
        VertexSet s(g.order());
        for (auto v : c) s.set(v);
        sets.push_back(s);
    }
    std::size_t best = 0;
    std::function<void(std::size_t, std::size_t, const VertexSet&)> go =
        [&](std::size_t i, std::size_t taken, const VertexSet& used) {
            best = std::max(best, taken);
            if (i == sets.size() || taken + (sets.size() - i) <= best) return;
            if (!sets[i].intersects(used)) go(i + 1, taken + 1, used | sets[i]);
            go(i + 1, taken, used);
        };
    go(0, 0, VertexSet(g.order()));
    return best;
}

CliquePerfReport is_clique_perfect(const Graph& g) {
    const std::size_t n = g.order();
    if (n > 20) throw std::invalid_argument("clique-perfection check is limited to 20 vertices");
    CliquePerfReport rep;
    rep.tau_c = tau_c(g);
    rep.alpha_c = alpha_c(g);
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<bool> pick(n, false);
        std::fill(pick.end() - static_cast<std::ptrdiff_t>(k), pick.end(), true);
        do {
            std::vector<Vertex> vs;
            for (std::size_t i = 0; i < n; ++i)
                if (pick[i]) vs.push_back(i);
            auto sub = induced_subgraph(g, vs).graph;
            std::size_t t = tau_c(sub), a = alpha_c(sub);
            if (t != a) {
                rep.clique_perfect = false;
                rep.failing = vs;
                rep.failing_tau = t;
                rep.failing_alpha = a;
                return rep;
            }
        } while (std::next_permutation(pick.begin(), pick.end()));
    }
    return rep;
}

Verdict find_unbalanced_witness(const Graph& g) {
    require_diamond_free(g);
    const ZeroOneMatrix a = clique_matrix(g);
    if (is_balanced(a)) throw std::invalid_argument("graph is balanced");
    VertexSet keep(g.order());
    keep.set();
    for (Vertex v = 0; v < g.order(); ++v) {
        keep.reset(v);
        if (is_balanced(clique_matrix(induced_subgraph(g, keep).graph))) keep.set(v);
    }
    auto sub = induced_subgraph(g, keep);
    auto v = is_minimally_unbalanced_df(sub.graph);
    if (!v.holds) throw std::logic_error("minimal unbalanced subgraph is not recognised: " + v.detail);
    if (v.odd_hole)
        for (auto& x : v.odd_hole->vertices) x = sub.original[x];
    if (v.sunoid) v.sunoid->vertices = sub.original;
    v.certificate = certificate_on(a, sub.original);
    v.method = Method::Oracle;
    v.detail = (v.odd_hole ? "odd hole of length " : "sunoid of order ") +
               std::to_string(sub.original.size());
    return v;
}

std::vector<MinUnbalanced> enumerate_min_unbalanced(std::size_t max_order) {
    std::vector<MinUnbalanced> out;
    for (std::size_t n = 5; n <= max_order; n += 2) out.push_back({Graph::cycle(n), {}, {}});

    std::vector<CyclicWord> words;
    for (std::size_t l = 3; 3 * l <= max_order; l += 2)
        words.push_back(canonicalize(LinearWord({{Letter::proper(0), l}})));
    // standard order is 4 + 3 * (exponent sum) - s >= 4 + 2s
    if (max_order >= 10) {
        std::size_t s_max = (max_order - 4) / 2;
        if (s_max % 2 == 0) --s_max;
        for (const auto& w : enumerate_sunwords(s_max, max_order / 3 + 1))
            if (w.canonical().count(Letter::sigma()) > 0) words.push_back(w);
    }

    std::map<MultisunKey, CyclicWord> found;
    for (const auto& w : words) {
        Multisun base = standard_multisun(w);
        if (base.order() > max_order) continue;
        auto segs = rim_segments(base);
        std::size_t budget = (max_order - base.order()) / 2;
        std::vector<std::size_t> pairs(segs.size(), 0);
        std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t left) {
            if (i == segs.size()) {
                Multisun m = base;
                for (std::size_t k = 0; k < segs.size(); ++k)
                    if (pairs[k] > 0) m = even_subdivide(m, segs[k].vertices[0], segs[k].vertices[1], 2 * pairs[k]);
                found.emplace(canonical_key(m), w);
                return;
            }
            for (std::size_t d = 0; d <= left; ++d) {
                pairs[i] = d;
                go(i + 1, left - d);
            }
            pairs[i] = 0;
        };
        go(0, budget);
    }
    for (const auto& [key, w] : found) {
        std::vector<std::vector<Vertex>> cliques(key.cliques.begin(), key.cliques.end());
        auto rec = multisun_on_rim(key.order, cliques);
        if (!rec) throw std::logic_error("enumerated multisun failed recognition: " + rec.detail);
        out.push_back({rec.multisun->graph(), *rec.multisun, w});
    }
    std::stable_sort(out.begin(), out.end(), [](const MinUnbalanced& x, const MinUnbalanced& y) {
        return x.graph.order() < y.graph.order();
    });
    return out;
}

}  // namespace balcheck
