#pragma once

#include <optional>
#include <string>
#include <vector>

#include "balcheck/graph.hpp"
#include "balcheck/matrix.hpp"
#include "balcheck/multisun.hpp"
#include "balcheck/words.hpp"

namespace balcheck {

enum class Method {
    Oracle,            // odd cycle submatrix search on the clique matrix
    Algorithm,         // odd hole tests on the intersection graphs of row deletions
    Characterization   // induced odd hole or induced sunoid
};

std::string to_string(Method m);

struct SunoidWitness {
    std::vector<Vertex> vertices;  // vertex i of the multisun is vertices[i] of the input
    Multisun multisun;
    CyclicWord word;
};

struct Verdict {
    bool holds = false;
    Method method = Method::Oracle;
    std::optional<Hole> odd_hole;              // input vertex ids
    // when set, odd_hole is a hole of the intersection graph of these rows only
    std::optional<std::vector<std::size_t>> hole_rows;
    std::optional<SunoidWitness> sunoid;
    std::optional<OddCycleCertificate> certificate;  // rows/columns of the examined matrix
    std::string detail;
};

bool is_minimally_unbalanced_oracle(const Graph& g);

// odd hole, or a multisun satisfying the N-conditions whose s-word is a sunword
Verdict is_minimally_unbalanced_df(const Graph& g);

// holds = balanced; throws on a diamond
Verdict balanced_df(const Graph& g, Method method);

// holds = balanced; throws on a non-linear matrix
Verdict balanced_linear(const ZeroOneMatrix& a, Method method);

std::size_t tau_c(const Graph& g);
std::size_t alpha_c(const Graph& g);

struct CliquePerfReport {
    std::size_t tau_c = 0;
    std::size_t alpha_c = 0;
    bool clique_perfect = true;
    std::vector<Vertex> failing;  // induced subgraph with tau_c != alpha_c
    std::size_t failing_tau = 0;
    std::size_t failing_alpha = 0;
};

CliquePerfReport is_clique_perfect(const Graph& g);

// greedy vertex deletion while unbalanced; the remainder is an odd hole or a sunoid
Verdict find_unbalanced_witness(const Graph& g);

struct MinUnbalanced {
    Graph graph;
    std::optional<Multisun> multisun;  // absent for odd holes
    std::optional<CyclicWord> word;
};

// odd holes and even subdivisions of standard multisuns of sunwords, up to max_order
std::vector<MinUnbalanced> enumerate_min_unbalanced(std::size_t max_order);

}  // namespace balcheck
