#include "balcheck/dyck.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <stdexcept>

namespace balcheck {

bool is_dyck_word(const std::string& w) {
    int h = 0;
    for (char c : w) {
        if (c == 'L') ++h;
        else if (c == 'R') --h;
        else return false;
        if (h < 0) return false;
    }
    return h == 0;
}

std::vector<int> word_to_path(const std::string& w) {
    if (!is_dyck_word(w)) throw std::invalid_argument("not a Dyck word: " + w);
    std::vector<int> h{0};
    for (char c : w) h.push_back(h.back() + (c == 'L' ? 1 : -1));
    return h;
}

std::string path_to_word(const std::vector<int>& ordinates) {
    if (ordinates.empty() || ordinates.front() != 0 || ordinates.back() != 0)
        throw std::invalid_argument("Dyck path must start and end at 0");
    std::string w;
    for (std::size_t i = 1; i < ordinates.size(); ++i) {
        int d = ordinates[i] - ordinates[i - 1];
        if (d != 1 && d != -1) throw std::invalid_argument("Dyck path steps must be +1 or -1");
        if (ordinates[i] < 0) throw std::invalid_argument("Dyck path goes below 0");
        w += d == 1 ? 'L' : 'R';
    }
    return w;
}

namespace {

void dyck_rec(std::size_t open, std::size_t close, std::string& cur, std::vector<std::string>& out) {
    if (open == 0 && close == 0) {
        out.push_back(cur);
        return;
    }
    if (open > 0) {
        cur.push_back('L');
        dyck_rec(open - 1, close, cur, out);
        cur.pop_back();
    }
    if (close > open) {
        cur.push_back('R');
        dyck_rec(open, close - 1, cur, out);
        cur.pop_back();
    }
}

LinearWord path_word(const WeightedDyckPath& p) {
    std::vector<Run> runs{{Letter::sigma(), 1}};
    for (std::size_t i = 0; i < p.ordinates.size(); ++i) {
        if (i > 0) runs.push_back({Letter::epsilon(), 1});
        runs.push_back({Letter::proper(static_cast<std::size_t>(p.ordinates[i])), p.weights[i]});
    }
    return LinearWord(runs);
}

}  // namespace

std::vector<std::string> enumerate_dyck(std::size_t semilength) {
    std::vector<std::string> out;
    std::string cur;
    dyck_rec(semilength, semilength, cur, out);
    return out;
}

std::uint64_t catalan(std::size_t n) {
    std::uint64_t c = 1;
    for (std::size_t i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

bool is_peak(const std::vector<int>& ordinates, std::size_t i) {
    return i > 0 && i + 1 < ordinates.size() && ordinates[i - 1] == ordinates[i + 1];
}

bool is_evenly_weighted(const WeightedDyckPath& p) {
    if (p.ordinates.size() != p.weights.size() || p.ordinates.size() % 2 == 0) return false;
    try {
        path_to_word(p.ordinates);
    } catch (const std::invalid_argument&) {
        return false;
    }
    for (std::size_t i = 0; i < p.weights.size(); ++i) {
        if (p.weights[i] == 0) return false;
        if ((p.weights[i] % 2 == 0) != is_peak(p.ordinates, i)) return false;
    }
    return true;
}

WeightedDyckPath sunword_to_dyck(const CyclicWord& c) {
    auto rep = check_sunword(c);
    if (!rep.sunword) throw std::invalid_argument("not a sunword");
    const SWord& w = *rep.sword.sword;
    if (!w.has_sigma) throw std::invalid_argument("single-letter sunword has no Dyck path");
    WeightedDyckPath forward;
    for (std::size_t h = 0; h < w.run_count(); ++h) {
        forward.ordinates.push_back(static_cast<int>(rep.order->rank(w.letters[h])) - 1);
        forward.weights.push_back(w.exponents[h]);
    }
    WeightedDyckPath backward{{forward.ordinates.rbegin(), forward.ordinates.rend()},
                              {forward.weights.rbegin(), forward.weights.rend()}};
    auto key = [](const WeightedDyckPath& p) { return std::tie(p.ordinates, p.weights); };
    return key(backward) < key(forward) ? backward : forward;
}

CyclicWord dyck_to_sunword(const WeightedDyckPath& p) {
    if (!is_evenly_weighted(p)) throw std::invalid_argument("path is not evenly weighted");
    if (p.ordinates.size() < 3) throw std::invalid_argument("path needs at least one step pair");
    std::map<int, std::size_t> sums;
    for (std::size_t i = 0; i < p.ordinates.size(); ++i) sums[p.ordinates[i]] += p.weights[i];
    for (auto [h, total] : sums)
        if (total % 2 == 1) throw std::invalid_argument("odd exponent sum at level " + std::to_string(h));
    return canonicalize(path_word(p));
}

std::vector<CyclicWord> enumerate_sunwords(std::size_t s_max, std::size_t weight_cap) {
    std::set<CyclicWord> found;
    for (std::size_t s = 3; s <= s_max; s += 2) {
        for (const auto& dw : enumerate_dyck((s - 1) / 2)) {
            WeightedDyckPath p{word_to_path(dw), std::vector<std::size_t>(s, 0)};
            // odometer over the admissible weights of every position
            std::vector<std::size_t> least(s);
            for (std::size_t i = 0; i < s; ++i) least[i] = is_peak(p.ordinates, i) ? 2 : 1;
            if (std::any_of(least.begin(), least.end(), [&](std::size_t x) { return x > weight_cap; }))
                continue;
            p.weights = least;
            while (true) {
                std::map<int, std::size_t> sums;
                for (std::size_t i = 0; i < s; ++i) sums[p.ordinates[i]] += p.weights[i];
                bool even = std::all_of(sums.begin(), sums.end(),
                                        [](const auto& kv) { return kv.second % 2 == 0; });
                if (even) found.insert(canonicalize(path_word(p)));
                std::size_t i = 0;
                while (i < s && p.weights[i] + 2 > weight_cap) {
                    p.weights[i] = least[i];
                    ++i;
                }
                if (i == s) break;
                p.weights[i] += 2;
            }
        }
    }
    for (std::size_t lambda = 3; lambda <= weight_cap * s_max; lambda += 2)
        found.insert(canonicalize(LinearWord({{Letter::proper(0), lambda}})));
    return {found.begin(), found.end()};
}

}  // namespace balcheck
