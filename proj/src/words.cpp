#include "balcheck/words.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace balcheck {

LinearWord::LinearWord(const std::vector<Run>& runs) {
    for (const auto& r : runs) {
        if (r.exponent == 0) continue;
        if (!runs_.empty() && runs_.back().letter == r.letter)
            runs_.back().exponent += r.exponent;
        else
            runs_.push_back(r);
    }
}

LinearWord LinearWord::from_letters(const std::vector<Letter>& letters) {
    std::vector<Run> runs;
    for (Letter x : letters) runs.push_back({x, 1});
    return LinearWord(runs);
}

std::vector<Letter> LinearWord::letters() const {
    std::vector<Letter> out;
    for (const auto& r : runs_) out.insert(out.end(), r.exponent, r.letter);
    return out;
}

std::size_t LinearWord::length() const {
    std::size_t n = 0;
    for (const auto& r : runs_) n += r.exponent;
    return n;
}

std::size_t LinearWord::count(Letter x) const {
    std::size_t n = 0;
    for (const auto& r : runs_)
        if (r.letter == x) n += r.exponent;
    return n;
}

std::vector<Letter> LinearWord::proper_letters() const {
    std::vector<Letter> out;
    for (const auto& r : runs_)
        if (r.letter.is_proper()) out.push_back(r.letter);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

LinearWord pattern(const LinearWord& w) {
    std::vector<Run> runs;
    for (auto r : w.runs()) {
        if (r.letter.is_epsilon()) r.exponent %= 2;
        runs.push_back(r);
    }
    return LinearWord(runs);
}

LinearWord opposite(const LinearWord& w) {
    auto xs = w.letters();
    auto first = xs.begin();
    if (first != xs.end() && first->is_sigma()) ++first;
    std::reverse(first, xs.end());
    return LinearWord::from_letters(xs);
}

namespace {

// epsilon runs reduced mod 2, reading cyclically
std::vector<Letter> cyclic_pattern(const std::vector<Letter>& xs) {
    auto start = std::find_if(xs.begin(), xs.end(), [](Letter x) { return !x.is_epsilon(); });
    if (start == xs.end()) {
        if (xs.size() % 2 == 1) return {Letter::epsilon()};
        return {};
    }
    std::vector<Letter> rotated(start, xs.end());
    rotated.insert(rotated.end(), xs.begin(), start);
    std::vector<Letter> out;
    std::size_t eps = 0;
    for (Letter x : rotated) {
        if (x.is_epsilon()) {
            ++eps;
            continue;
        }
        if (eps % 2 == 1) out.push_back(Letter::epsilon());
        eps = 0;
        out.push_back(x);
    }
    if (eps % 2 == 1) out.push_back(Letter::epsilon());
    return out;
}

std::vector<Letter> renamed(const std::vector<Letter>& xs) {
    std::map<Letter, Letter> names;
    std::vector<Letter> out;
    out.reserve(xs.size());
    for (Letter x : xs) {
        if (!x.is_proper()) {
            out.push_back(x);
            continue;
        }
        auto it = names.find(x);
        if (it == names.end()) it = names.emplace(x, Letter::proper(names.size())).first;
        out.push_back(it->second);
    }
    return out;
}

}  // namespace

CyclicWord canonicalize(const LinearWord& w) {
    auto p = cyclic_pattern(w.letters());
    std::vector<Letter> best = renamed(p);
    const std::size_t n = p.size();
    std::vector<Letter> reading(n);
    for (int dir : {1, -1})
        for (std::size_t shift = 0; shift < n; ++shift) {
            for (std::size_t i = 0; i < n; ++i)
                reading[i] = dir == 1 ? p[(shift + i) % n] : p[(shift + n - i) % n];
            auto candidate = renamed(reading);
            if (candidate < best) best = std::move(candidate);
        }
    CyclicWord c;
    c.canonical_ = LinearWord::from_letters(best);
    return c;
}

bool CyclicWord::operator<(const CyclicWord& o) const {
    return canonical_.letters() < o.canonical_.letters();
}

bool cyclic_equal(const LinearWord& u, const LinearWord& v) {
    return canonicalize(u) == canonicalize(v);
}

std::string to_string(SWordClause c) {
    switch (c) {
        case SWordClause::Empty: return "empty word";
        case SWordClause::SeveralSigmas: return "more than one sigma";
        case SWordClause::EpsilonWithoutSigma: return "epsilon in a word without sigma";
        case SWordClause::SeveralLettersWithoutSigma: return "several proper letters without sigma";
        case SWordClause::EvenExponent: return "single-letter exponent is even";
        case SWordClause::SingleVertexClique: return "single-letter exponent below 3";
        case SWordClause::RunShape: return "runs not separated by single epsilons";
        case SWordClause::EqualNeighbourRuns: return "consecutive runs carry the same letter";
        case SWordClause::SingleProperLetter: return "sigma with a single proper letter";
        case SWordClause::OddLetterSum: return "odd exponent sum for a proper letter";
        case SWordClause::EvenRunCount: return "even number of runs";
        case SWordClause::OddEpsilonCount: return "odd number of epsilons";
    }
    return "?";
}

LinearWord SWord::representative() const {
    std::vector<Run> runs;
    if (has_sigma) runs.push_back({Letter::sigma(), 1});
    for (std::size_t h = 0; h < letters.size(); ++h) {
        if (h > 0) runs.push_back({Letter::epsilon(), 1});
        runs.push_back({letters[h], exponents[h]});
    }
    return LinearWord(runs);
}

SWordReport check_s_word(const CyclicWord& c) {
    SWordReport rep;
    const auto& w = c.canonical();
    auto fail = [&](SWordClause clause) { rep.failed.push_back(clause); };
    if (w.empty()) {
        fail(SWordClause::Empty);
        return rep;
    }
    const std::size_t sigmas = w.count(Letter::sigma());
    const std::size_t eps = w.count(Letter::epsilon());
    const auto proper = w.proper_letters();
    SWord sw;

    if (sigmas == 0) {
        if (eps > 0) fail(SWordClause::EpsilonWithoutSigma);
        if (proper.size() > 1) fail(SWordClause::SeveralLettersWithoutSigma);
        if (proper.size() == 1) {
            std::size_t lambda = w.count(proper.front());
            if (lambda % 2 == 0) fail(SWordClause::EvenExponent);
            if (lambda < 3) fail(SWordClause::SingleVertexClique);
            sw.letters = {proper.front()};
            sw.exponents = {lambda};
        }
        if (rep.valid()) rep.sword = sw;
        return rep;
    }

    if (sigmas > 1) fail(SWordClause::SeveralSigmas);
    if (proper.size() < 2) fail(SWordClause::SingleProperLetter);
    // the canonical representative starts with its single sigma
    const auto& runs = w.runs();
    bool shape = runs.front().letter.is_sigma() && runs.size() >= 2;
    for (std::size_t i = 1; i < runs.size() && shape; ++i) {
        bool proper_slot = i % 2 == 1;
        const Run& r = runs[i];
        if (proper_slot ? !r.letter.is_proper() : !(r.letter.is_epsilon() && r.exponent == 1))
            shape = false;
    }
    if (shape && runs.size() % 2 == 1) shape = false;  // must end with a proper run
    if (!shape) {
        fail(SWordClause::RunShape);
    } else {
        sw.has_sigma = true;
        for (std::size_t i = 1; i < runs.size(); i += 2) {
            sw.letters.push_back(runs[i].letter);
            sw.exponents.push_back(runs[i].exponent);
        }
        for (std::size_t h = 0; h + 1 < sw.letters.size(); ++h)
            if (sw.letters[h] == sw.letters[h + 1]) {
                fail(SWordClause::EqualNeighbourRuns);
                break;
            }
        if (sw.run_count() % 2 == 0) fail(SWordClause::EvenRunCount);
    }
    for (Letter x : proper)
        if (w.count(x) % 2 == 1) {
            fail(SWordClause::OddLetterSum);
            break;
        }
    if (eps % 2 == 1) fail(SWordClause::OddEpsilonCount);
    if (rep.valid()) rep.sword = sw;
    return rep;
}

bool is_s_word(const CyclicWord& c) { return check_s_word(c).valid(); }

std::vector<Letter> standard_rim_labels(const SWord& w) {
    const Letter e = Letter::epsilon();
    std::vector<Letter> out;
    if (!w.has_sigma) {
        for (std::size_t i = 0; i < w.exponents.front(); ++i) out.insert(out.end(), {w.letters.front(), e, e});
        return out;
    }
    out = {Letter::sigma(), e, e};
    for (std::size_t h = 0; h < w.run_count(); ++h) {
        if (h > 0) out.push_back(e);
        for (std::size_t i = 0; i < w.exponents[h]; ++i) {
            if (i > 0) out.insert(out.end(), {e, e});
            out.push_back(w.letters[h]);
        }
    }
    out.insert(out.end(), {e, e});
    return out;
}

Multisun standard_multisun(const SWord& w) {
    auto labels = standard_rim_labels(w);
    std::map<Letter, std::vector<Vertex>> cliques;
    for (Vertex i = 0; i < labels.size(); ++i)
        if (labels[i].is_proper()) cliques[labels[i]].push_back(i);
    std::vector<std::vector<Vertex>> list;
    for (auto& [x, vs] : cliques) {
        if (w.has_sigma) vs.insert(vs.begin(), 0);
        list.push_back(vs);
    }
    auto r = multisun_on_rim(labels.size(), list);
    if (!r) throw std::logic_error("standard multisun construction failed: " + r.detail);
    return std::move(*r.multisun);
}

Multisun standard_multisun(const CyclicWord& c) {
    auto rep = check_s_word(c);
    if (!rep.valid()) throw std::invalid_argument("not an s-word: " + to_string(rep.failed.front()));
    return standard_multisun(*rep.sword);
}

std::size_t LetterOrder::rank(Letter x) const {
    if (x.is_sigma()) return 0;
    auto it = std::find(chain.begin(), chain.end(), x);
    if (it == chain.end()) throw std::invalid_argument("letter outside the order");
    return static_cast<std::size_t>(it - chain.begin()) + 1;
}

LetterOrder induced_order(const SWord& w) {
    LetterOrder order;
    if (!w.has_sigma) {
        order.chain = {w.letters.front()};
        return order;
    }
    auto labels = standard_rim_labels(w);
    const std::size_t n = labels.size();
    std::map<Letter, std::size_t> dist;
    for (std::size_t i = 0; i < n; ++i) {
        if (!labels[i].is_proper()) continue;
        std::size_t d = std::min(i, n - i);
        auto [it, fresh] = dist.emplace(labels[i], d);
        if (!fresh) it->second = std::min(it->second, d);
    }
    std::vector<std::pair<std::size_t, Letter>> ranked;
    for (auto [x, d] : dist) ranked.emplace_back(d, x);
    std::sort(ranked.begin(), ranked.end());
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        if (i > 0 && ranked[i].first == ranked[i - 1].first && !order.tie)
            order.tie = std::make_pair(ranked[i - 1].second, ranked[i].second);
        order.chain.push_back(ranked[i].second);
    }
    return order;
}

JumpCheck find_jump(const SWord& w) {
    JumpCheck check;
    if (!w.has_sigma) return check;
    auto order = induced_order(w);
    if (!order.defined()) {
        check.order_defined = false;
        return check;
    }
    std::vector<Letter> seq{Letter::sigma()};
    seq.insert(seq.end(), w.letters.begin(), w.letters.end());
    seq.push_back(Letter::sigma());
    for (std::size_t h = 0; h + 1 < seq.size(); ++h) {
        std::size_t a = order.rank(seq[h]), b = order.rank(seq[h + 1]);
        if (a + 1 != b && b + 1 != a) {
            check.jump = Jump{seq[h], seq[h + 1], h};
            break;
        }
    }
    return check;
}

ParityCheck check_parity(const SWord& w) {
    ParityCheck check;
    if (!w.has_sigma) return check;
    const std::size_t s = w.run_count();
    auto violate = [&](std::size_t h, std::string why) {
        check.ok = false;
        check.run = h + 1;
        check.detail = std::move(why);
        return check;
    };
    if (w.exponents.front() % 2 == 0) return violate(0, "first exponent is even");
    if (w.exponents.back() % 2 == 0) return violate(s - 1, "last exponent is even");
    for (std::size_t h = 1; h + 1 < s; ++h) {
        bool odd = w.exponents[h] % 2 == 1;
        bool differ = w.letters[h - 1] != w.letters[h + 1];
        if (odd != differ)
            return violate(h, odd ? "odd exponent between equal letters"
                                  : "even exponent between distinct letters");
    }
    return check;
}

SunwordReport check_sunword(const CyclicWord& c) {
    SunwordReport rep;
    rep.sword = check_s_word(c);
    if (!rep.sword.valid()) return rep;
    const SWord& w = *rep.sword.sword;
    rep.order = induced_order(w);
    rep.jump = find_jump(w);
    rep.parity = check_parity(w);
    rep.sunword = rep.jump.jump_free() && rep.parity.ok;
    return rep;
}

bool is_sunword(const CyclicWord& c) { return check_sunword(c).sunword; }

CyclicWord project(const LinearWord& w, const std::vector<Letter>& drop) {
    const auto proper = w.proper_letters();
    if (proper.size() < 2) throw std::invalid_argument("projection needs two proper letters");
    if (w.count(Letter::sigma()) != 1) throw std::invalid_argument("projection needs one sigma");
    std::vector<Letter> dropped = drop;
    std::sort(dropped.begin(), dropped.end());
    dropped.erase(std::unique(dropped.begin(), dropped.end()), dropped.end());
    if (dropped.empty()) throw std::invalid_argument("nothing to drop");
    for (Letter x : dropped)
        if (!std::binary_search(proper.begin(), proper.end(), x))
            throw std::invalid_argument("dropped letter does not occur in the word");
    if (dropped.size() >= proper.size())
        throw std::invalid_argument("cannot drop every proper letter");
    std::optional<Letter> survivor;
    if (dropped.size() + 1 == proper.size())
        for (Letter x : proper)
            if (!std::binary_search(dropped.begin(), dropped.end(), x)) survivor = x;
    auto xs = w.letters();
    for (auto& x : xs) {
        if (std::binary_search(dropped.begin(), dropped.end(), x))
            x = Letter::epsilon();
        else if (x.is_sigma() && survivor)
            x = *survivor;
    }
    return canonicalize(LinearWord::from_letters(xs));
}

CyclicWord project(const CyclicWord& c, const std::vector<Letter>& drop) {
    return project(c.canonical(), drop);
}

LinearWord rim_word(const Multisun& m) {
    std::vector<Letter> xs;
    for (Vertex v : m.rim()) {
        const auto& in = m.memberships(v);
        if (in.empty())
            xs.push_back(Letter::epsilon());
        else if (in.size() == 1)
            xs.push_back(Letter::proper(in.front()));
        else
            xs.push_back(Letter::sigma());
    }
    return LinearWord::from_letters(xs);
}

CyclicWord word_of_multisun(const Multisun& m) { return canonicalize(rim_word(m)); }

std::optional<CyclicWord> s_word_of_multisun(const Multisun& m) {
    if (!check_n_conditions(m).all_pass()) return std::nullopt;
    return word_of_multisun(m);
}

}  // namespace balcheck
