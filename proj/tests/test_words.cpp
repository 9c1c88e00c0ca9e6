#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "balcheck/corpus.hpp"
#include "balcheck/dyck.hpp"
#include "balcheck/io.hpp"
#include "balcheck/words.hpp"
#include "fixtures.hpp"

using namespace balcheck;

namespace {

CyclicWord cw(const std::string& s) { return canonicalize(parse_word(s)); }

const char* kFig3bLong = "*.4a.2a.6a.b.2b.3a.2a.b.3c.2c.3b.2b.2b.a.2";
const char* kFig3b = "*a3.b2.a2.b.c2.b3.a";

// all rotations and reflections of the expanded letter sequence, letters renamed by first use
std::string orbit_min(const LinearWord& w) {
    auto letters = w.letters();
    std::string best;
    for (int flip = 0; flip < 2; ++flip) {
        for (std::size_t r = 0; r < letters.size(); ++r) {
            std::map<std::size_t, std::size_t> rename;
            std::string s;
            for (std::size_t i = 0; i < letters.size(); ++i) {
                Letter x = letters[(r + i) % letters.size()];
                if (x.is_proper()) {
                    auto it = rename.try_emplace(x.index(), rename.size()).first;
                    s += static_cast<char>('a' + it->second);
                } else {
                    s += x.is_sigma() ? '*' : '.';
                }
            }
            if (best.empty() || s < best) best = s;
        }
        std::reverse(letters.begin(), letters.end());
    }
    return best;
}

LinearWord random_word(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kind(0, 5), exp(1, 4), len(1, 8);
    std::vector<Run> runs;
    if (kind(rng) < 3) runs.push_back({Letter::sigma(), 1});
    for (int i = len(rng); i > 0; --i) {
        int k = kind(rng);
        Letter x = k < 2 ? Letter::epsilon() : Letter::proper(static_cast<std::size_t>(k - 2));
        runs.push_back({x, static_cast<std::size_t>(exp(rng))});
    }
    return LinearWord(runs);
}

}  // namespace

TEST_CASE("pattern deletes epsilon pairs") {
    CHECK(render_word(pattern(parse_word("a.2b.3c.4b.a"))) == "ab.cb.a");
    CHECK(render_word(pattern(parse_word("abc"))) == "abc");
    CHECK(render_word(pattern(parse_word(kFig3bLong))) == kFig3b);
    CHECK(render_word(pattern(parse_word("a.2a.4a.2a.6a.8a.2a.20"))) == "a7");

    std::mt19937_64 rng(2);
    for (int i = 0; i < 500; ++i) {
        auto w = random_word(rng);
        CHECK(pattern(pattern(w)) == pattern(w));
    }
}

TEST_CASE("cyclic equality") {
    auto w = parse_word(kFig3b);
    CHECK(cyclic_equal(w, opposite(w)));
    CHECK(cyclic_equal(parse_word("a.2a"), parse_word("a2.2")));
    CHECK(cyclic_equal(parse_word("*a.b"), parse_word("*b.a")));
    CHECK_FALSE(cyclic_equal(parse_word("*a.b2.a"), parse_word("*a2.b.a")));
    CHECK(render_word(opposite(parse_word("*a.b"))) == "*b.a");
    CHECK(opposite(parse_word("aba")) == parse_word("aba"));

    std::mt19937_64 rng(4);
    for (int i = 0; i < 1000; ++i) {
        auto u = random_word(rng);
        CHECK(canonicalize(u) == canonicalize(opposite(u)));
        auto c = canonicalize(u).canonical();
        std::string expanded;
        for (auto x : c.letters()) expanded += render_letter(x);
        CHECK(orbit_min(c) == expanded);
        auto letters = u.letters();
        std::rotate(letters.begin(), letters.begin() + i % letters.size(), letters.end());
        CHECK(canonicalize(LinearWord::from_letters(letters)) == canonicalize(u));
    }
}

TEST_CASE("s-word clauses") {
    CHECK(is_s_word(cw("a7")));
    CHECK(is_s_word(cw(kFig3b)));
    auto rep = check_s_word(cw("*a.b"));
    REQUIRE_FALSE(rep.valid());
    CHECK(std::count(rep.failed.begin(), rep.failed.end(), SWordClause::OddLetterSum) == 1);
    auto single = check_s_word(cw("a"));
    CHECK(std::count(single.failed.begin(), single.failed.end(), SWordClause::SingleVertexClique) == 1);
    CHECK_FALSE(is_s_word(cw("a4")));
    CHECK_FALSE(is_s_word(cw("*a2.*b2")));
    CHECK_FALSE(is_s_word(cw("*a2.a2.b2")));
    CHECK_FALSE(is_s_word(cw("*a4")));

    // running sums of the three-letter sunword
    auto sw = *check_s_word(cw(kFig3b)).sword;
    std::map<Letter, std::size_t> sums;
    for (std::size_t h = 0; h < sw.run_count(); ++h) sums[sw.letters[h]] += sw.exponents[h];
    std::multiset<std::size_t> values;
    for (auto [x, s] : sums) values.insert(s);
    CHECK(values == std::multiset<std::size_t>{2, 6, 6});
}

TEST_CASE("standard multisuns") {
    auto m = standard_multisun(cw("a3"));
    CHECK(m.order() == 9);
    CHECK(canonical_key(m) == canonical_key(*multisun_on_rim(9, {{1, 4, 7}}).multisun));

    auto sw = *check_s_word(cw("*a.b2.a")).sword;
    std::string labels;
    for (auto x : standard_rim_labels(sw)) labels += render_letter(x);
    CHECK(labels.size() == 13);
    CHECK(labels == "*..a.b..b.a..");

    CHECK(standard_multisun(cw(kFig3b)).order() == 39);
    CHECK(word_of_multisun(*recognize_multisun(fixture::c9_triangle()).multisun) == cw("a3"));
    CHECK(word_of_multisun(standard_multisun(cw(kFig3b))) == cw(kFig3b));
}

TEST_CASE("round trip between s-words and multisuns") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 60; ++i) {
        auto c = random_s_word(2 + i % 2, 3 + 2 * (i % 3), 3, rng);
        auto m = standard_multisun(c);
        REQUIRE(check_n_conditions(m).all_pass());
        CHECK(*s_word_of_multisun(m) == c);
        auto segs = rim_segments(m);
        auto longer = even_subdivide(m, segs[0].vertices[0], segs[0].vertices[1], 2);
        CHECK(*s_word_of_multisun(longer) == c);
        CHECK(canonical_key(standardize(longer)) == canonical_key(m));
    }
}

TEST_CASE("induced order") {
    auto order_of = [](const std::string& s) {
        auto o = induced_order(*check_s_word(cw(s)).sword);
        std::string chain;
        for (auto x : o.chain) chain += render_letter(x);
        return std::make_pair(chain, o.defined());
    };
    auto rep = check_s_word(cw(kFig3b));
    auto o = induced_order(*rep.sword);
    REQUIRE(o.defined());
    REQUIRE(o.chain.size() == 3);
    std::vector<std::size_t> sums;
    for (auto x : o.chain) {
        std::size_t s = 0;
        for (std::size_t h = 0; h < rep.sword->run_count(); ++h)
            if (rep.sword->letters[h] == x) s += rep.sword->exponents[h];
        sums.push_back(s);
    }
    CHECK(sums == std::vector<std::size_t>{6, 6, 2});
    CHECK(order_of("*a.b2.a") == std::make_pair(std::string("ab"), true));
    CHECK_FALSE(order_of("*a.b.a.b.c2").second);
}

TEST_CASE("jumps and parity") {
    CHECK(find_jump(*check_s_word(cw(kFig3b)).sword).jump_free());
    auto j = find_jump(*check_s_word(cw("*a.b2.a.c2.a2")).sword);
    REQUIRE(j.order_defined);
    REQUIRE(j.jump);
    CHECK(render_letter(j.jump->from) == 'a');
    CHECK(render_letter(j.jump->to) == 'c');
    CHECK(find_jump(*check_s_word(cw("a5")).sword).jump_free());
    CHECK_FALSE(is_sunword(cw("*a.b2.a.c2.a2")));

    CHECK(check_parity(*check_s_word(cw(kFig3b)).sword).ok);
    auto bad = check_parity(*check_s_word(cw("*a.b2.a.b2.a.b2.a")).sword);
    CHECK_FALSE(bad.ok);
    CHECK(bad.run == 3);
    CHECK(check_parity(*check_s_word(cw("*a3.b2.a")).sword).ok);
}

TEST_CASE("sunwords of the long rim words") {
    CHECK(is_sunword(cw("a7")));
    CHECK(is_sunword(cw(kFig3b)));
    CHECK(is_sunword(canonicalize(parse_word(kFig3bLong))));
    CHECK_FALSE(is_sunword(cw("a3.")));
}

TEST_CASE("projection") {
    auto w = parse_word("*a.b.c2.b.a3");
    CHECK(project(w, {Letter::proper(0)}) == cw("*b.c2.b"));
    CHECK(project(w, {Letter::proper(0), Letter::proper(1)}) == cw("c3"));
    CHECK_THROWS_AS(project(w, {Letter::proper(0), Letter::proper(1), Letter::proper(2)}), std::invalid_argument);
}

TEST_CASE("sunword structure") {
    for (const auto& c : enumerate_sunwords(7, 4)) {
        auto rep = check_sunword(c);
        REQUIRE(rep.sunword);
        const SWord& w = *rep.sword.sword;
        if (!w.has_sigma) continue;
        CHECK(w.run_count() % 2 == 1);
        CHECK(c.canonical().count(Letter::epsilon()) % 2 == 0);
        // every exponent of the top letter is even
        Letter top = rep.order->chain.back();
        for (std::size_t h = 0; h < w.run_count(); ++h)
            if (w.letters[h] == top) CHECK(w.exponents[h] % 2 == 0);
        // the support of every interval is an interval of the order
        for (std::size_t i = 0; i < w.run_count(); ++i) {
            std::set<std::size_t> ranks;
            for (std::size_t k = i; k < w.run_count(); ++k) {
                ranks.insert(rep.order->rank(w.letters[k]));
                CHECK(*ranks.rbegin() - *ranks.begin() + 1 == ranks.size());
            }
        }
        // every legal projection stays a sunword
        auto letters = w.representative().proper_letters();
        for (std::size_t mask = 1; mask + 1 < (1u << letters.size()); ++mask) {
            std::vector<Letter> drop;
            for (std::size_t b = 0; b < letters.size(); ++b)
                if (mask >> b & 1) drop.push_back(letters[b]);
            CHECK(is_sunword(project(w.representative(), drop)));
        }
    }
}

TEST_CASE("word grammar round trip") {
    CHECK(render_word(parse_word(kFig3b)) == kFig3b);
    CHECK(render_word(parse_word("a7")) == "a7");
    CHECK_THROWS_AS(parse_word("*a0"), ParseError);
    CHECK_THROWS_AS(parse_word(""), ParseError);
    CHECK_THROWS_AS(parse_word("A"), ParseError);
    std::mt19937_64 rng(9);
    for (int i = 0; i < 300; ++i) {
        auto w = random_word(rng);
        CHECK(parse_word(render_word(w)) == w);
    }
}
