#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "balcheck/words.hpp"

namespace balcheck {

// words over {L, R}; no prefix has more R than L
bool is_dyck_word(const std::string& w);
std::vector<int> word_to_path(const std::string& w);         // ordinates h_0 .. h_2n
std::string path_to_word(const std::vector<int>& ordinates);
std::vector<std::string> enumerate_dyck(std::size_t semilength);  // lexicographic, L < R
std::uint64_t catalan(std::size_t n);

// ordinates of the runs x_1 .. x_s (rank - 1) and their exponents
struct WeightedDyckPath {
    std::vector<int> ordinates;
    std::vector<std::size_t> weights;
    std::string word() const { return path_to_word(ordinates); }
    bool operator==(const WeightedDyckPath&) const = default;
};

// position i is a peak when its two neighbours share an ordinate
bool is_peak(const std::vector<int>& ordinates, std::size_t i);
// weights positive, even exactly at peaks
bool is_evenly_weighted(const WeightedDyckPath& p);

// Both orientations of the word give the same sunword; the one with the
// lexicographically smaller ordinates (then weights) is returned.
WeightedDyckPath sunword_to_dyck(const CyclicWord& c);
CyclicWord dyck_to_sunword(const WeightedDyckPath& p);

// sunwords with 3 <= s <= s_max runs and exponents <= weight_cap, plus the
// single-letter words [a^l] with l odd, 3 <= l <= weight_cap * s_max; sorted,
// without repetitions
std::vector<CyclicWord> enumerate_sunwords(std::size_t s_max, std::size_t weight_cap);

}  // namespace balcheck
