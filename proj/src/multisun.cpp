#include "balcheck/multisun.hpp"

#include <algorithm>
#include <stdexcept>

namespace balcheck {

struct MultisunBuilder {
    static Multisun make(Graph g, std::vector<Vertex> rim, std::vector<Clique> cliques) {
        Multisun m;
        m.graph_ = std::move(g);
        m.rim_ = std::move(rim);
        m.cliques_ = std::move(cliques);
        const std::size_t n = m.graph_.order();
        m.position_.assign(n, 0);
        for (std::size_t i = 0; i < n; ++i) m.position_[m.rim_[i]] = i;
        m.member_.assign(n, {});
        for (std::size_t c = 0; c < m.cliques_.size(); ++c)
            for (Vertex v : m.cliques_[c]) m.member_[v].push_back(c);
        if (m.cliques_.size() >= 2) {
            VertexSet common(n);
            common.set();
            for (const auto& c : m.cliques_) {
                VertexSet s(n);
                for (Vertex v : c) s.set(v);
                common &= s;
            }
            if (common.count() == 1) m.hub_ = common.find_first();
        }
        return m;
    }
};

std::string to_string(MultisunDefect d) {
    switch (d) {
        case MultisunDefect::None: return "none";
        case MultisunDefect::Empty: return "empty graph";
        case MultisunDefect::EvenOrder: return "even order";
        case MultisunDefect::Diamond: return "contains a diamond";
        case MultisunDefect::RimNotHamiltonian:
            return "maximal 2-cliques do not span a Hamiltonian cycle";
        case MultisunDefect::NoInscribedClique: return "no inscribed clique (odd hole)";
    }
    return "?";
}

MultisunRecognition recognize_multisun(const Graph& g) {
    MultisunRecognition out;
    const std::size_t n = g.order();
    auto fail = [&](MultisunDefect d, std::string detail = {}) {
        out.defect = d;
        out.detail = detail.empty() ? to_string(d) : std::move(detail);
        return out;
    };
    if (n == 0) return fail(MultisunDefect::Empty);
    if (n % 2 == 0) return fail(MultisunDefect::EvenOrder);
    if (auto d = find_diamond(g))
        return fail(MultisunDefect::Diamond, "diamond on " + std::to_string((*d)[0]) + "," +
                                                 std::to_string((*d)[1]) + "," +
                                                 std::to_string((*d)[2]) + "," +
                                                 std::to_string((*d)[3]));

    std::vector<std::vector<Vertex>> rim_adj(n);
    std::vector<Clique> inscribed;
    for (auto& c : maximal_cliques(g)) {
        if (c.size() == 2) {
            rim_adj[c[0]].push_back(c[1]);
            rim_adj[c[1]].push_back(c[0]);
        } else if (c.size() >= 3) {
            inscribed.push_back(std::move(c));
        } else {
            return fail(MultisunDefect::RimNotHamiltonian,
                        "isolated vertex " + std::to_string(c[0]));
        }
    }
    for (Vertex v = 0; v < n; ++v)
        if (rim_adj[v].size() != 2)
            return fail(MultisunDefect::RimNotHamiltonian,
                        "vertex " + std::to_string(v) + " lies on " +
                            std::to_string(rim_adj[v].size()) + " maximal 2-cliques");
    std::vector<Vertex> rim{0};
    Vertex prev = 0, cur = std::min(rim_adj[0][0], rim_adj[0][1]);
    while (cur != 0) {
        rim.push_back(cur);
        Vertex next = rim_adj[cur][0] == prev ? rim_adj[cur][1] : rim_adj[cur][0];
        prev = cur;
        cur = next;
    }
    if (rim.size() != n)
        return fail(MultisunDefect::RimNotHamiltonian,
                    "maximal 2-cliques form a cycle of length " + std::to_string(rim.size()));
    if (inscribed.empty()) return fail(MultisunDefect::NoInscribedClique);
    out.multisun = MultisunBuilder::make(g, std::move(rim), std::move(inscribed));
    return out;
}

MultisunRecognition multisun_on_rim(std::size_t n, const std::vector<std::vector<Vertex>>& cliques) {
    Graph g = Graph::cycle(n);
    for (const auto& c : cliques) g.add_clique(c);
    return recognize_multisun(g);
}

Graph graph_without_cliques(const Multisun& m, const std::vector<std::size_t>& removed) {
    Graph g = m.graph();
    for (auto c : removed) {
        if (c >= m.clique_count()) throw std::out_of_range("clique index out of range");
        const auto& vs = m.cliques()[c];
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) g.remove_edge(vs[i], vs[j]);
    }
    return g;
}

Multisun sub_multisun(const Multisun& m, const std::vector<std::size_t>& removed) {
    std::vector<std::size_t> uniq = removed;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    if (uniq.size() >= m.clique_count())
        throw std::invalid_argument("cannot remove every inscribed clique");
    auto r = recognize_multisun(graph_without_cliques(m, uniq));
    if (!r) throw std::logic_error("sub-multisun lost the multisun structure: " + r.detail);
    return std::move(*r.multisun);
}

std::string to_string(PathKind k) {
    switch (k) {
        case PathKind::A: return "A-path";
        case PathKind::AXi: return "Axi-path";
        case PathKind::AB: return "AB-path";
    }
    return "?";
}

std::string to_string(ConditionStatus s) {
    switch (s) {
        case ConditionStatus::Pass: return "pass";
        case ConditionStatus::Fail: return "fail";
        case ConditionStatus::NotApplicable: return "not applicable";
    }
    return "?";
}

std::vector<PathReport> rim_segments(const Multisun& m) {
    const auto& rim = m.rim();
    const std::size_t n = rim.size();
    std::vector<std::size_t> marked;
    for (std::size_t i = 0; i < n; ++i)
        if (!m.memberships(rim[i]).empty()) marked.push_back(i);
    std::vector<PathReport> out;
    for (std::size_t k = 0; k < marked.size(); ++k) {
        std::size_t from = marked[k], to = marked[(k + 1) % marked.size()];
        PathReport p;
        for (std::size_t i = from;; i = (i + 1) % n) {
            p.vertices.push_back(rim[i]);
            if (i == to && p.vertices.size() > 1) break;
        }
        const auto& a = m.memberships(p.front());
        const auto& b = m.memberships(p.back());
        std::vector<std::size_t> shared;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(shared));
        if (!shared.empty()) {
            p.cliques = {shared.front()};
            bool hub_end = m.hub() && (p.front() == *m.hub() || p.back() == *m.hub());
            p.kind = hub_end ? PathKind::AXi : PathKind::A;
        } else {
            p.kind = PathKind::AB;
            p.cliques = {a.front(), b.front()};
        }
        out.push_back(std::move(p));
    }
    return out;
}

bool NConditionReport::all_pass() const { return first_failure() == 0; }

int NConditionReport::first_failure() const {
    for (int i = 0; i < 5; ++i)
        if (conditions[i].status != ConditionStatus::Pass) return i + 1;
    return 0;
}

NConditionReport check_n_conditions(const Multisun& m) {
    NConditionReport rep;
    auto segments = rim_segments(m);
    auto fail_path = [](ConditionResult& r, const PathReport& p, std::string why) {
        r.status = ConditionStatus::Fail;
        r.path = p;
        r.cliques = p.cliques;
        r.detail = std::move(why);
    };

    auto& n1 = rep.conditions[0];
    for (const auto& p : segments) {
        if (p.kind == PathKind::AB) continue;
        if (p.vertex_count() % 2 == 1 || p.vertex_count() < 4) {
            fail_path(n1, p, "A-path with " + std::to_string(p.vertex_count()) + " vertices");
            break;
        }
    }

    auto& n2 = rep.conditions[1];
    for (std::size_t c = 0; c < m.clique_count(); ++c)
        if (m.cliques()[c].size() % 2 == 0) {
            n2.status = ConditionStatus::Fail;
            n2.cliques = {c};
            n2.detail = "clique of size " + std::to_string(m.cliques()[c].size());
            break;
        }

    auto& n3 = rep.conditions[2];
    const std::size_t p = m.clique_count();
    if (p >= 2) {
        if (!m.hub()) {
            n3.status = ConditionStatus::Fail;
            n3.detail = "inscribed cliques have no common vertex";
            // witness: a pair of cliques not meeting in a vertex shared by all
            for (std::size_t a = 0; a < p && n3.cliques.empty(); ++a)
                for (std::size_t b = a + 1; b < p; ++b) {
                    std::vector<Vertex> common;
                    std::set_intersection(m.cliques()[a].begin(), m.cliques()[a].end(),
                                          m.cliques()[b].begin(), m.cliques()[b].end(),
                                          std::back_inserter(common));
                    bool disjoint = common.empty();
                    bool elsewhere = !disjoint && std::any_of(m.cliques().begin(), m.cliques().end(),
                                                              [&](const Clique& c) {
                                                                  return !std::binary_search(
                                                                      c.begin(), c.end(), common[0]);
                                                              });
                    if (disjoint || elsewhere) {
                        n3.cliques = {a, b};
                        break;
                    }
                }
        } else {
            rep.hub = m.hub();
        }
    }

    auto& n4 = rep.conditions[3];
    auto& n5 = rep.conditions[4];
    if (n3.status == ConditionStatus::Fail) {
        n4.status = n5.status = ConditionStatus::NotApplicable;
        n4.detail = n5.detail = "no hub";
        return rep;
    }
    for (const auto& s : segments) {
        if (s.kind == PathKind::AXi && s.vertex_count() % 2 == 1 && n4.status == ConditionStatus::Pass)
            fail_path(n4, s, "Axi-path with " + std::to_string(s.vertex_count()) + " vertices");
        if (s.kind == PathKind::AB && s.vertex_count() % 2 == 0 && n5.status == ConditionStatus::Pass)
            fail_path(n5, s, "AB-path with " + std::to_string(s.vertex_count()) + " vertices");
    }
    return rep;
}

HohReport is_hoh_free(const Multisun& m) {
    const std::size_t p = m.clique_count();
    HohReport rep;
    for (std::size_t mask = 0; mask + 1 < (std::size_t{1} << p); ++mask) {
        std::vector<std::size_t> removed;
        for (std::size_t c = 0; c < p; ++c)
            if (mask >> c & 1) removed.push_back(c);
        Graph g = graph_without_cliques(m, removed);
        auto hole = find_chordless_cycle(g, [](std::size_t len) { return len % 2 == 1; }, 5,
                                         CycleSearch::First);
        if (hole) {
            rep.free = false;
            rep.removed = std::move(removed);
            rep.hole = std::move(hole);
            return rep;
        }
    }
    return rep;
}

namespace {

const PathReport& find_segment(const std::vector<PathReport>& segments, Vertex u, Vertex v) {
    for (const auto& s : segments)
        if ((s.front() == u && s.back() == v) || (s.front() == v && s.back() == u)) return s;
    throw std::invalid_argument("no rim segment between " + std::to_string(u) + " and " +
                                std::to_string(v));
}

Multisun recertify(const Graph& g) {
    auto r = recognize_multisun(g);
    if (!r) throw std::invalid_argument("result is not a multisun: " + r.detail);
    return std::move(*r.multisun);
}

}  // namespace

Multisun even_subdivide(const Multisun& m, Vertex u, Vertex v, std::size_t count) {
    if (count == 0 || count % 2 == 1)
        throw std::invalid_argument("subdivision count must be positive and even");
    if (u >= m.order() || v >= m.order() || (m.rim_next(u) != v && m.rim_next(v) != u))
        throw std::invalid_argument("not a rim edge");
    Graph g = m.graph();
    g.remove_edge(u, v);
    Vertex last = u;
    for (std::size_t i = 0; i < count; ++i) {
        Vertex w = g.add_vertex();
        g.add_edge(last, w);
        last = w;
    }
    g.add_edge(last, v);
    return recertify(g);
}

Multisun even_contract(const Multisun& m, Vertex u, Vertex v, std::size_t new_length) {
    auto segments = rim_segments(m);
    const auto& seg = find_segment(segments, u, v);
    const std::size_t len = seg.vertex_count();
    const std::size_t least = seg.kind == PathKind::AB ? 3 : 4;
    if (new_length % 2 != len % 2) throw std::invalid_argument("contraction must keep the parity");
    if (new_length >= len) throw std::invalid_argument("contraction must shorten the path");
    if (new_length < least)
        throw std::invalid_argument("path would be shorter than " + std::to_string(least));
    std::vector<bool> drop(m.order(), false);
    for (std::size_t i = new_length - 1; i + 1 < len; ++i) drop[seg.vertices[i]] = true;
    std::vector<Vertex> index(m.order(), m.order());
    Vertex next = 0;
    for (Vertex x = 0; x < m.order(); ++x)
        if (!drop[x]) index[x] = next++;
    Graph g(next);
    for (auto [a, b] : m.graph().edges())
        if (!drop[a] && !drop[b]) g.add_edge(index[a], index[b]);
    g.add_edge(index[seg.vertices[new_length - 2]], index[seg.back()]);
    return recertify(g);
}

Multisun standardize(const Multisun& m) {
    if (!check_n_conditions(m).all_pass())
        throw std::invalid_argument("standardize requires the N-conditions");
    auto segments = rim_segments(m);
    Vertex start = m.hub() ? *m.hub() : segments.front().front();
    auto first = std::find_if(segments.begin(), segments.end(),
                              [&](const PathReport& s) { return s.front() == start; });
    std::rotate(segments.begin(), first, segments.end());

    std::vector<Vertex> index(m.order(), m.order());
    std::size_t n = 0;
    for (const auto& s : segments) {
        index[s.front()] = n;
        n += s.kind == PathKind::AB ? 2 : 3;
    }
    Graph g = Graph::cycle(n);
    for (const auto& c : m.cliques()) {
        std::vector<Vertex> mapped;
        for (Vertex v : c) mapped.push_back(index[v]);
        g.add_clique(mapped);
    }
    return recertify(g);
}

std::vector<PathReport> decompose_hole(const Multisun& m, const Hole& h) {
    const auto& vs = h.vertices;
    const std::size_t k = vs.size();
    auto is_rim_edge = [&](Vertex a, Vertex b) { return m.rim_next(a) == b || m.rim_next(b) == a; };
    auto edge_clique = [&](Vertex a, Vertex b) -> std::optional<std::size_t> {
        for (auto c : m.memberships(a))
            if (std::binary_search(m.cliques()[c].begin(), m.cliques()[c].end(), b)) return c;
        return std::nullopt;
    };
    if (k < 4) throw std::invalid_argument("not a hole");
    std::vector<std::size_t> used;
    std::vector<std::size_t> clique_edge_at;  // positions i with (vs[i], vs[i+1]) a clique edge
    for (std::size_t i = 0; i < k; ++i) {
        Vertex a = vs[i], b = vs[(i + 1) % k];
        if (a >= m.order() || b >= m.order()) throw std::invalid_argument("vertex out of range");
        if (is_rim_edge(a, b)) continue;
        auto c = edge_clique(a, b);
        if (!c) throw std::invalid_argument("hole uses a non-edge");
        used.push_back(*c);
        clique_edge_at.push_back(i);
    }
    if (used.empty()) throw std::invalid_argument("hole uses no inscribed clique");
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    std::vector<std::size_t> removed;
    for (std::size_t c = 0; c < m.clique_count(); ++c)
        if (!std::binary_search(used.begin(), used.end(), c)) removed.push_back(c);
    if (!is_hole(graph_without_cliques(m, removed), vs))
        throw std::invalid_argument("not a hole of any sub-multisun");

    std::vector<PathReport> out;
    const std::size_t q = clique_edge_at.size();
    for (std::size_t j = 0; j < q; ++j) {
        std::size_t begin = (clique_edge_at[j] + 1) % k;
        std::size_t end = clique_edge_at[(j + 1) % q];
        PathReport p;
        for (std::size_t i = begin;; i = (i + 1) % k) {
            p.vertices.push_back(vs[i]);
            if (i == end) break;
        }
        auto before = *edge_clique(vs[clique_edge_at[j]], vs[begin]);
        auto after = *edge_clique(vs[end], vs[(end + 1) % k]);
        if (before == after) {
            p.kind = PathKind::A;
            p.cliques = {before};
        } else {
            p.kind = PathKind::AB;
            p.cliques = {before, after};
        }
        out.push_back(std::move(p));
    }
    return out;
}

MultisunKey canonical_key(const Multisun& m) {
    const std::size_t n = m.order();
    MultisunKey best;
    bool have = false;
    for (std::size_t shift = 0; shift < n; ++shift)
        for (int dir : {1, -1}) {
            MultisunKey key{n, {}};
            for (const auto& c : m.cliques()) {
                std::vector<std::size_t> pos;
                for (Vertex v : c) {
                    std::size_t p = m.rim_position(v);
                    pos.push_back(dir == 1 ? (p + n - shift) % n : (shift + n - p) % n);
                }
                std::sort(pos.begin(), pos.end());
                key.cliques.push_back(std::move(pos));
            }
            std::sort(key.cliques.begin(), key.cliques.end());
            if (!have || key < best) {
                best = std::move(key);
                have = true;
            }
        }
    return best;
}

}  // namespace balcheck
