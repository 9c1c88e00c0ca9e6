#include <doctest.h>

#include <random>

#include "balcheck/corpus.hpp"
#include "balcheck/io.hpp"
#include "balcheck/multisun.hpp"
#include "balcheck/words.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace balcheck;

namespace {

Multisun on_rim(std::size_t n, const std::vector<std::vector<Vertex>>& cliques) {
    auto rec = multisun_on_rim(n, cliques);
    REQUIRE(rec);
    return *rec.multisun;
}

Multisun of_word(const std::string& w) { return standard_multisun(canonicalize(parse_word(w))); }

std::vector<std::size_t> segment_sizes(const Multisun& m) {
    std::vector<std::size_t> out;
    for (const auto& s : rim_segments(m)) out.push_back(s.vertex_count());
    std::sort(out.begin(), out.end());
    return out;
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
    Graph h(g.order());
    for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    return h;
}

}  // namespace

TEST_CASE("multisun recognition") {
    auto rec = recognize_multisun(fixture::c9_triangle());
    REQUIRE(rec);
    CHECK(rec.multisun->cliques() == std::vector<Clique>{{0, 3, 6}});
    CHECK_FALSE(rec.multisun->hub());
    CHECK(rec.multisun->rim() == std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6, 7, 8});

    auto even = recognize_multisun(fixture::rim_with_cliques(6, {{0, 2, 4}}));
    CHECK_FALSE(even);
    CHECK(even.defect == MultisunDefect::EvenOrder);
    CHECK(recognize_multisun(fixture::petersen()).defect == MultisunDefect::EvenOrder);
    Graph tailed = fixture::petersen();
    tailed.add_edge(0, tailed.add_vertex());
    CHECK(recognize_multisun(tailed).defect == MultisunDefect::RimNotHamiltonian);
    CHECK(recognize_multisun(Graph::cycle(9)).defect == MultisunDefect::NoInscribedClique);
    CHECK(recognize_multisun(Graph()).defect == MultisunDefect::Empty);

    Graph diamond = fixture::rim_with_cliques(9, {{0, 2, 4}});
    diamond.add_edge(0, 3);
    CHECK(recognize_multisun(diamond).defect == MultisunDefect::Diamond);

    // recognition does not depend on the vertex names
    std::mt19937_64 rng(3);
    auto m = of_word("*a3.b2.a2.b.c2.b3.a");
    for (int t = 0; t < 20; ++t) {
        std::vector<Vertex> perm(m.order());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto r = recognize_multisun(relabel(m.graph(), perm));
        REQUIRE(r);
        CHECK(canonical_key(*r.multisun) == canonical_key(m));
        CHECK(r.multisun->hub() == perm[*m.hub()]);
    }
}

TEST_CASE("sub-multisuns") {
    auto two = of_word("*a.b2.a");
    REQUIRE(two.clique_count() == 2);
    auto one = sub_multisun(two, {0});
    CHECK(one.order() == 13);
    CHECK(one.clique_count() == 1);
    CHECK(one.cliques()[0].size() == 3);
    CHECK(sub_multisun(two, {}).graph() == two.graph());
    CHECK_THROWS_AS(sub_multisun(two, {0, 1}), std::invalid_argument);

    auto three = of_word("*a3.b2.a2.b.c2.b3.a");
    CHECK(sub_multisun(three, {0, 2}).clique_count() == 1);
}

TEST_CASE("N-conditions") {
    auto ok = check_n_conditions(on_rim(9, {{0, 3, 6}}));
    CHECK(ok.all_pass());
    CHECK(segment_sizes(on_rim(9, {{0, 3, 6}})) == std::vector<std::size_t>{4, 4, 4});

    auto n1 = check_n_conditions(on_rim(13, {{0, 3, 7}}));
    CHECK(n1.first_failure() == 1);
    REQUIRE(n1.conditions[0].path);
    CHECK(n1.conditions[0].path->vertices == std::vector<Vertex>{3, 4, 5, 6, 7});

    auto n2 = check_n_conditions(on_rim(13, {{0, 3, 6, 9}}));
    CHECK(n2.conditions[1].status == ConditionStatus::Fail);

    auto n3 = check_n_conditions(on_rim(15, {{0, 3, 6}, {8, 11, 14}}));
    CHECK(n3.conditions[2].status == ConditionStatus::Fail);
    CHECK(n3.conditions[3].status == ConditionStatus::NotApplicable);
    CHECK(n3.conditions[4].status == ConditionStatus::NotApplicable);

    CHECK(check_n_conditions(of_word("*a3.b2.a2.b.c2.b3.a")).all_pass());
}

TEST_CASE("hereditary odd-hole freeness") {
    CHECK(is_hoh_free(on_rim(9, {{0, 3, 6}})).free);

    auto nested = on_rim(13, {{0, 3, 7}});
    auto direct = is_hoh_free(nested);
    CHECK_FALSE(direct.free);
    CHECK(direct.removed.empty());
    REQUIRE(direct.hole);
    CHECK(is_hole(nested.graph(), direct.hole->vertices));

    // no odd hole, but deleting the triangle exposes an 11-hole
    auto layered = on_rim(23, {{0, 3, 6}, {0, 10, 15, 20}});
    CHECK_FALSE(find_hole(layered.graph(), Parity::Odd, 5));
    auto exposed = find_hole(graph_without_cliques(layered, {0}), Parity::Odd, 5);
    REQUIRE(exposed);
    CHECK(exposed->length() == 11);
    CHECK_FALSE(is_hoh_free(layered).free);

    CHECK(is_hoh_free(of_word("*a3.b2.a2.b.c2.b3.a")).free);
    CHECK(is_hoh_free(of_word("a7")).free);
}

TEST_CASE("literal word of a hub-avoiding clique") {
    // the c-clique drops the hub: the literal rim word is unchanged but N-3 fails
    auto m = of_word("*a3.b2.a2.b.c4.b3.a");
    REQUIRE(m.hub());
    std::vector<std::vector<Vertex>> cliques;
    for (const auto& c : m.cliques()) {
        std::vector<Vertex> pos;
        for (auto v : c) pos.push_back(m.rim_position(v));
        std::sort(pos.begin(), pos.end());
        cliques.push_back(pos);
    }
    auto& big = *std::max_element(cliques.begin(), cliques.end(),
                                  [](const auto& x, const auto& y) { return x.size() < y.size(); });
    big.erase(std::remove(big.begin(), big.end(), m.rim_position(*m.hub())), big.end());
    auto avoiding = on_rim(m.order(), cliques);
    CHECK(is_sunword(word_of_multisun(avoiding)));
    CHECK(check_n_conditions(avoiding).first_failure() == 2);
    CHECK_FALSE(s_word_of_multisun(avoiding));
    CHECK_FALSE(is_hoh_free(avoiding).free);
}

TEST_CASE("even subdivision and contraction") {
    auto m = on_rim(9, {{0, 3, 6}});
    auto longer = even_subdivide(m, 0, 1, 2);
    CHECK(longer.order() == 11);
    CHECK(segment_sizes(longer) == std::vector<std::size_t>{4, 4, 6});
    CHECK(canonical_key(standardize(longer)) == canonical_key(m));
    CHECK(canonical_key(even_contract(longer, 0, 3, 4)) == canonical_key(m));
    CHECK_THROWS_AS(even_subdivide(m, 0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(even_subdivide(m, 0, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(even_contract(longer, 0, 3, 5), std::invalid_argument);
    CHECK_THROWS_AS(even_contract(m, 0, 3, 2), std::invalid_argument);
}

TEST_CASE("standardization") {
    auto w = parse_word("a.2a.4a.2a.6a.8a.2a.20");
    std::vector<Vertex> pos;
    auto letters = w.letters();
    for (Vertex i = 0; i < letters.size(); ++i)
        if (letters[i].is_proper()) pos.push_back(i);
    auto big = on_rim(51, {pos});
    auto st = standardize(big);
    CHECK(st.order() == 21);
    CHECK(st.cliques() == std::vector<Clique>{{0, 3, 6, 9, 12, 15, 18}});

    for (const auto& s : {"a3", "*a.b2.a", "*a3.b2.a2.b.c2.b3.a"}) {
        auto m = of_word(s);
        CHECK(canonical_key(standardize(m)) == canonical_key(m));
    }
}

TEST_CASE("hole decomposition") {
    auto sun = on_rim(9, {{0, 3, 6}});
    auto paths = decompose_hole(sun, Hole{{0, 1, 2, 3}});
    REQUIRE(paths.size() == 1);
    CHECK(paths[0].kind == PathKind::A);
    CHECK(paths[0].vertex_count() % 2 == 0);

    // standard multisun of *a.b2.a: hub 0, cliques {0,3,10} and {0,5,8}
    auto two = of_word("*a.b2.a");
    REQUIRE(two.cliques() == std::vector<Clique>{{0, 3, 10}, {0, 5, 8}});
    auto ab = decompose_hole(two, Hole{{3, 4, 5, 8, 9, 10}});
    REQUIRE(ab.size() == 2);
    CHECK(ab[0].kind == PathKind::AB);
    CHECK(ab[1].kind == PathKind::AB);
    CHECK(ab[0].vertex_count() == ab[1].vertex_count());
    CHECK(ab[0].vertex_count() % 2 == 1);

    CHECK_THROWS_AS(decompose_hole(two, Hole{{0, 1, 2}}), std::invalid_argument);
}

TEST_CASE("canonical keys") {
    auto a = on_rim(11, {{0, 3, 6}});
    auto b = on_rim(11, {{0, 5, 8}});
    CHECK(canonical_key(a) == canonical_key(b));
    CHECK_FALSE(canonical_key(a) == canonical_key(on_rim(11, {{0, 4, 7}})));
}

TEST_CASE("random corpus multisuns are multisuns") {
    auto corpus = random_multisuns(80, 17);
    CHECK(corpus.size() == 80);
    std::size_t failing = 0;
    for (const auto& m : corpus) {
        CHECK(m.order() % 2 == 1);
        CHECK(is_diamond_free(m.graph()));
        if (!check_n_conditions(m).all_pass()) ++failing;
    }
    CHECK(failing > 20);
}
