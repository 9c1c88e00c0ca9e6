// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "balcheck/corpus.hpp"
#include "balcheck/dyck.hpp"
#include "balcheck/io.hpp"
#include "balcheck/recognition.hpp"

using namespace balcheck;

namespace {

constexpr double kPatternSeconds = 1.0;
constexpr double kDyckSeconds = 60.0;
constexpr double kMasterSeconds = 600.0;
constexpr double kCliquePerfSeconds = 60.0;
constexpr std::size_t kRandomMultisuns = 600;
constexpr std::uint64_t kSeed = 20240607;

struct CertificateTally {
    std::size_t negative = 0, certificates = 0, holes = 0, bad = 0;
    std::string first_bad;

    void fail(const std::string& why) {
        if (bad++ == 0) first_bad = why;
    }

    void record(const Graph& g, const Verdict& v, const std::string& what) {
        if (v.holds) return;
        ++negative;
        if (!v.certificate) return fail(what + ": negative verdict without certificate");
        ++certificates;
        if (!verify_certificate(clique_matrix(g), *v.certificate)) fail(what + ": certificate does not verify");
        if (v.odd_hole) {
            ++holes;
            Graph host = v.hole_rows ? intersection_graph(select_rows(clique_matrix(g), *v.hole_rows)) : g;
            if (!is_hole(host, v.odd_hole->vertices) || v.odd_hole->length() % 2 == 0)
                fail(what + ": hole is not an odd hole");
        }
    }

    void record_hole(const Graph& g, const Hole& h, const std::string& what) {
        ++holes;
        if (!is_hole(g, h.vertices)) fail(what + ": hole has a chord");
    }
};

CertificateTally tally;
int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int id, bool pass, const std::string& text) {
    std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", id, text.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

std::string fmt(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", s);
    return buf;
}

CyclicWord cw(const std::string& s) { return canonicalize(parse_word(s)); }

void long_word_patterns() {
    auto t0 = std::chrono::steady_clock::now();
    auto a = parse_word("a.2a.4a.2a.6a.8a.2a.20");
    auto b = parse_word("*.4a.2a.6a.b.2b.3a.2a.b.3c.2c.3b.2b.2b.a.2");
    bool pa = render_word(pattern(a)) == "a7";
    bool pb = render_word(pattern(b)) == "*a3.b2.a2.b.c2.b3.a";
    bool sa = is_sunword(canonicalize(a)), sb = is_sunword(canonicalize(b));
    double t = seconds_since(t0);
    report(1, pa && pb && sa && sb && t < kPatternSeconds,
           "long rim word patterns a7 and *a3.b2.a2.b.c2.b3.a, both sunwords (" + fmt(t) + ")");
}

void projections() {
    auto w = parse_word("*a.b.c2.b.a3");
    auto one = project(w, {Letter::proper(0)});
    auto two = project(w, {Letter::proper(0), Letter::proper(1)});
    bool ok = one == cw("*b.c2.b") && two == cw("c3");
    report(2, ok, "projections give " + render_word(one) + " and " + render_word(two));
}

void dyck_layer() {
    auto t0 = std::chrono::steady_clock::now();
    bool list = enumerate_dyck(3) == std::vector<std::string>{"LLLRRR", "LLRLRR", "LLRRLR", "LRLLRR", "LRLRLR"};
    std::vector<std::uint64_t> cat{1};
    bool counts = true;
    for (std::size_t n = 1; n <= 10; ++n) {
        std::uint64_t c = 0;
        for (std::size_t i = 0; i < n; ++i) c += cat[i] * cat[n - 1 - i];
        cat.push_back(c);
    }
    for (std::size_t n = 0; n <= 10; ++n) counts = counts && enumerate_dyck(n).size() == cat[n];
    auto p = sunword_to_dyck(cw("*a3.b2.a2.b.c2.b3.a"));
    bool fig = p.word() == "LRLLRR" && p.weights == std::vector<std::size_t>{3, 2, 2, 1, 2, 3, 1} &&
               is_evenly_weighted(p);
    std::size_t trips = 0, broken = 0;
    for (const auto& c : enumerate_sunwords(9, 4)) {
        if (c.canonical().count(Letter::sigma()) == 0) continue;
        ++trips;
        auto q = sunword_to_dyck(c);
        WeightedDyckPath rev{{q.ordinates.rbegin(), q.ordinates.rend()}, {q.weights.rbegin(), q.weights.rend()}};
        if (!is_evenly_weighted(q) || !(dyck_to_sunword(q) == c) || !(dyck_to_sunword(rev) == c)) ++broken;
    }
    double t = seconds_since(t0);
    report(3, list && counts && fig && broken == 0 && t < kDyckSeconds,
           "Dyck list, Catalan counts n<=10, *a3.b2.a2.b.c2.b3.a -> LRLLRR (3,2,2,1,2,3,1), " + std::to_string(trips) +
               " round trips, " + std::to_string(broken) + " broken (" + fmt(t) + ")");
}

void master_equivalence() {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Multisun> corpus;
    std::size_t standard = 0, subdivided = 0;
    for (const auto& c : enumerate_sunwords(7, 4)) {
        Multisun m = standard_multisun(c);
        corpus.push_back(m);
        ++standard;
        for (const auto& seg : rim_segments(m)) {
            corpus.push_back(even_subdivide(m, seg.vertices[0], seg.vertices[1], 2));
            ++subdivided;
        }
    }
    auto random = random_multisuns(kRandomMultisuns, kSeed);
    std::size_t violators = 0;
    for (const auto& m : random)
        if (!check_n_conditions(m).all_pass()) ++violators;
    corpus.insert(corpus.end(), random.begin(), random.end());

    std::size_t disagreements = 0, sunwords = 0, literal_mismatch = 0;
    for (const auto& m : corpus) {
        auto sw = s_word_of_multisun(m);
        bool sun = sw && is_sunword(*sw);
        auto hoh = is_hoh_free(m);
        if (hoh.hole) tally.record_hole(graph_without_cliques(m, hoh.removed), *hoh.hole, "HOH witness");
        if (sun != hoh.free) ++disagreements;
        if (sun) ++sunwords;
        if (is_sunword(word_of_multisun(m)) != hoh.free) ++literal_mismatch;
    }
    double t = seconds_since(t0);
    report(4, disagreements == 0 && violators > 0 && t < kMasterSeconds,
           std::to_string(corpus.size()) + " multisuns (" + std::to_string(standard) + " standard, " +
               std::to_string(subdivided) + " subdivided, " + std::to_string(random.size()) + " random with " +
               std::to_string(violators) + " N-violators), " + std::to_string(sunwords) + " sunoids, " +
               std::to_string(disagreements) + " disagreements (" + fmt(t) + ")");
    std::printf("info: literal rim word misclassifies %zu multisuns whose cliques avoid the hub\n", literal_mismatch);
}

std::vector<Graph> diamond_free_corpus(std::size_t max_order, std::size_t random_count, std::uint64_t seed) {
    std::vector<Graph> out;
    for (const auto& e : enumerate_min_unbalanced(max_order)) out.push_back(e.graph);
    auto random = random_diamond_free_corpus(random_count, max_order, seed);
    out.insert(out.end(), random.begin(), random.end());
    return out;
}

void oracle_triangle() {
    auto t0 = std::chrono::steady_clock::now();
    auto corpus = diamond_free_corpus(13, 400, kSeed + 1);
    std::size_t disagreements = 0, unbalanced = 0, minimality = 0;
    for (const auto& g : corpus) {
        auto oracle_v = balanced_df(g, Method::Oracle);
        auto alg = balanced_df(g, Method::Algorithm);
        auto chr = balanced_df(g, Method::Characterization);
        tally.record(g, oracle_v, "oracle");
        tally.record(g, alg, "algorithm");
        tally.record(g, chr, "characterization");
        bool witness_ok = true;
        if (!oracle_v.holds) {
            ++unbalanced;
            auto w = find_unbalanced_witness(g);
            tally.record(g, w, "witness");
            witness_ok = w.odd_hole.has_value() != w.sunoid.has_value();
        }
        if (oracle_v.holds != alg.holds || oracle_v.holds != chr.holds || !witness_ok) ++disagreements;
        if (is_minimally_unbalanced_oracle(g) != is_minimally_unbalanced_df(g).holds) ++minimality;
    }
    report(5, disagreements == 0 && minimality == 0,
           std::to_string(corpus.size()) + " diamond-free graphs n<=13 (" + std::to_string(unbalanced) +
               " unbalanced), oracle/algorithm/characterization+witness disagreements " +
               std::to_string(disagreements) + ", minimality disagreements " + std::to_string(minimality) + " (" +
               fmt(seconds_since(t0)) + ")");
}

void minimality() {
    auto all = enumerate_min_unbalanced(9);
    auto sun = canonical_key(*multisun_on_rim(9, {{0, 3, 6}}).multisun);
    bool exact = all.size() == 4 && all[0].graph == Graph::cycle(5) && all[1].graph == Graph::cycle(7) &&
                 all[2].graph == Graph::cycle(9) && all[3].multisun && canonical_key(*all[3].multisun) == sun;
    bool oracle_ok = std::all_of(all.begin(), all.end(), [](const auto& e) { return is_minimally_unbalanced_oracle(e.graph); });
    std::size_t smallest = 0;
    for (const auto& e : enumerate_min_unbalanced(15))
        if (e.multisun && (smallest == 0 || e.graph.order() < smallest)) smallest = e.graph.order();
    report(6, exact && oracle_ok && smallest == 9,
           "order <= 9 gives {C5, C7, C9, C9+triangle}, all minimally unbalanced; smallest sunoid order " +
               std::to_string(smallest));
}

void clique_perfection() {
    auto t0 = std::chrono::steady_clock::now();
    auto corpus = diamond_free_corpus(10, 300, kSeed + 2);
    std::size_t disagreements = 0, imperfect = 0;
    for (const auto& g : corpus) {
        auto rep = is_clique_perfect(g);
        auto v = balanced_df(g, Method::Oracle);
        tally.record(g, v, "oracle");
        if (!rep.clique_perfect) ++imperfect;
        if (rep.clique_perfect != v.holds) ++disagreements;
    }
    Graph c9 = Graph::cycle(9);
    c9.add_clique({0, 3, 6});
    std::size_t tau = tau_c(c9), alpha = alpha_c(c9);
    double t = seconds_since(t0);
    report(7, disagreements == 0 && tau == 5 && alpha == 4 && t < kCliquePerfSeconds,
           std::to_string(corpus.size()) + " graphs n<=10 (" + std::to_string(imperfect) + " not clique-perfect), " +
               std::to_string(disagreements) + " disagreements; C9+triangle tau_c=" + std::to_string(tau) +
               " alpha_c=" + std::to_string(alpha) + " (" + fmt(t) + ")");
}

void sunword_structure() {
    std::size_t words = 0, projections = 0, violations = 0;
    for (const auto& c : enumerate_sunwords(9, 4)) {
        auto rep = check_sunword(c);
        if (!rep.sunword) {
            ++violations;
            continue;
        }
        ++words;
        const SWord& w = *rep.sword.sword;
        if (!w.has_sigma) continue;
        if (w.run_count() % 2 == 0 || c.canonical().count(Letter::epsilon()) % 2 == 1) ++violations;
        Letter top = rep.order->chain.back();
        for (std::size_t h = 0; h < w.run_count(); ++h)
            if (w.letters[h] == top && w.exponents[h] % 2 == 1) ++violations;
        for (std::size_t i = 0; i < w.run_count(); ++i) {
            std::set<std::size_t> ranks;
            for (std::size_t k = i; k < w.run_count(); ++k) {
                ranks.insert(rep.order->rank(w.letters[k]));
                if (*ranks.rbegin() - *ranks.begin() + 1 != ranks.size()) ++violations;
            }
        }
        auto rep_word = w.representative();
        auto letters = rep_word.proper_letters();
        for (std::size_t mask = 1; mask + 1 < (1u << letters.size()); ++mask) {
            std::vector<Letter> drop;
            for (std::size_t b = 0; b < letters.size(); ++b)
                if (mask >> b & 1) drop.push_back(letters[b]);
            ++projections;
            if (!is_sunword(project(rep_word, drop))) ++violations;
        }
    }
    report(8, violations == 0,
           std::to_string(words) + " sunwords, " + std::to_string(projections) + " projections, " +
               std::to_string(violations) + " violations");
}

void certificates() {
    report(9, tally.bad == 0 && tally.certificates == tally.negative && tally.negative > 0,
           std::to_string(tally.negative) + " negative verdicts, " + std::to_string(tally.certificates) +
               " certificates, " + std::to_string(tally.holes) + " holes, " + std::to_string(tally.bad) +
               " invalid" + (tally.bad ? " (first: " + tally.first_bad + ")" : std::string()));
}

}  // namespace

int main() {
    std::vector<std::pair<int, std::function<void()>>> criteria{
        {1, long_word_patterns}, {2, projections},     {3, dyck_layer},        {4, master_equivalence},
        {5, oracle_triangle}, {6, minimality},      {7, clique_perfection}, {8, sunword_structure}};
    for (auto& [id, run] : criteria) {
        try {
            run();
        } catch (const std::exception& e) {
            report(id, false, std::string("exception: ") + e.what());
        }
    }
    certificates();
    return failures == 0 ? 0 : 1;
}
