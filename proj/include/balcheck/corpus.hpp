#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "balcheck/graph.hpp"
#include "balcheck/multisun.hpp"
#include "balcheck/words.hpp"

namespace balcheck {

// Erdos-Renyi sample; one edge of every diamond found is deleted until none is left
Graph random_diamond_free(std::size_t n, double p, std::mt19937_64& rng);

// random s-word with s runs over p proper letters (s odd, p >= 2); not necessarily a sunword
CyclicWord random_s_word(std::size_t p, std::size_t s, std::size_t max_exponent,
                         std::mt19937_64& rng);

// odd rim with random inscribed cliques; often violates the N-conditions
Multisun random_inscribed_multisun(std::mt19937_64& rng);

// A mix of multisuns: evenly subdivided standard multisuns of random s-words,
// random clique placements, odd-perturbed standard multisuns and multisuns
// whose hub clique is replaced by one avoiding the hub.
std::vector<Multisun> random_multisuns(std::size_t count, std::uint64_t seed);

// random diamond-free graphs with 5 <= order <= max_order, plus attachments to odd holes
std::vector<Graph> random_diamond_free_corpus(std::size_t count, std::size_t max_order,
                                              std::uint64_t seed);

}  // namespace balcheck
