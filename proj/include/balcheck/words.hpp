#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "balcheck/multisun.hpp"

namespace balcheck {

// order: sigma < epsilon < a < b < ...
class Letter {
public:
    constexpr Letter() = default;  // epsilon
    static constexpr Letter sigma() { return Letter(0); }
    static constexpr Letter epsilon() { return Letter(1); }
    static constexpr Letter proper(std::size_t i) { return Letter(static_cast<std::uint16_t>(2 + i)); }

    bool is_sigma() const { return code_ == 0; }
    bool is_epsilon() const { return code_ == 1; }
    bool is_proper() const { return code_ >= 2; }
    std::size_t index() const { return code_ - 2u; }  // proper letters only

    auto operator<=>(const Letter&) const = default;

private:
    constexpr explicit Letter(std::uint16_t code) : code_(code) {}
    std::uint16_t code_ = 1;
};

struct Run {
    Letter letter;
    std::size_t exponent = 1;
    bool operator==(const Run&) const = default;
};

// standard form: positive exponents, adjacent runs carry distinct letters
class LinearWord {
public:
    LinearWord() = default;
    explicit LinearWord(const std::vector<Run>& runs);
    static LinearWord from_letters(const std::vector<Letter>& letters);

    const std::vector<Run>& runs() const { return runs_; }
    std::vector<Letter> letters() const;
    std::size_t length() const;
    bool empty() const { return runs_.empty(); }
    std::size_t count(Letter x) const;
    std::vector<Letter> proper_letters() const;  // sorted, distinct

    bool operator==(const LinearWord&) const = default;

private:
    std::vector<Run> runs_;
};

// epsilon exponents reduced mod 2, runs re-merged
LinearWord pattern(const LinearWord& w);

// reversed reading; a leading sigma stays in front
LinearWord opposite(const LinearWord& w);

// Equivalence class under epsilon-pair deletion (taken cyclically), rotation,
// reflection and renaming of proper letters. The canonical representative is
// the least expanded letter sequence over the orbit, proper letters renamed
// by first occurrence.
class CyclicWord {
public:
    const LinearWord& canonical() const { return canonical_; }
    bool operator==(const CyclicWord& o) const { return canonical_ == o.canonical_; }
    bool operator<(const CyclicWord& o) const;

private:
    friend CyclicWord canonicalize(const LinearWord& w);
    LinearWord canonical_;
};

CyclicWord canonicalize(const LinearWord& w);
bool cyclic_equal(const LinearWord& u, const LinearWord& v);

// s-words

enum class SWordClause {
    Empty,
    SeveralSigmas,
    EpsilonWithoutSigma,
    SeveralLettersWithoutSigma,
    EvenExponent,          // form (i): exponent must be odd
    SingleVertexClique,    // form (i): [a] encodes a one-vertex clique
    RunShape,              // form (ii): runs must be separated by single epsilons
    EqualNeighbourRuns,    // form (ii): x_h = x_{h+1}
    SingleProperLetter,    // form (ii) needs at least two proper letters
    OddLetterSum,
    EvenRunCount,
    OddEpsilonCount
};

std::string to_string(SWordClause c);

// sigma x_1^l_1 eps x_2^l_2 ... eps x_s^l_s, or a^l without sigma
struct SWord {
    bool has_sigma = false;
    std::vector<Letter> letters;
    std::vector<std::size_t> exponents;
    std::size_t run_count() const { return letters.size(); }
    LinearWord representative() const;
};

struct SWordReport {
    std::vector<SWordClause> failed;
    std::optional<SWord> sword;  // present when valid
    bool valid() const { return failed.empty(); }
};

SWordReport check_s_word(const CyclicWord& c);
bool is_s_word(const CyclicWord& c);

// labels of the standard multisun rim, position 0 first
std::vector<Letter> standard_rim_labels(const SWord& w);
Multisun standard_multisun(const SWord& w);
Multisun standard_multisun(const CyclicWord& c);

// proper letters by increasing distance from the hub of the standard multisun
struct LetterOrder {
    std::vector<Letter> chain;               // rank 1, 2, ...
    std::optional<std::pair<Letter, Letter>> tie;
    bool defined() const { return !tie.has_value(); }
    std::size_t rank(Letter x) const;        // 0 for sigma
};

LetterOrder induced_order(const SWord& w);

struct Jump {
    Letter from, to;
    std::size_t position = 0;  // pair (x_h, x_{h+1}) with x_0 = x_{s+1} = sigma
};

struct JumpCheck {
    bool order_defined = true;
    std::optional<Jump> jump;
    bool jump_free() const { return order_defined && !jump; }
};

JumpCheck find_jump(const SWord& w);

struct ParityCheck {
    bool ok = true;
    std::size_t run = 0;  // 1-based index of the first violating run
    std::string detail;
};

ParityCheck check_parity(const SWord& w);

struct SunwordReport {
    SWordReport sword;
    std::optional<LetterOrder> order;
    JumpCheck jump;
    ParityCheck parity;
    bool sunword = false;
};

SunwordReport check_sunword(const CyclicWord& c);
bool is_sunword(const CyclicWord& c);

// drop: proper letters (in the naming of the given representative) turned into epsilon
CyclicWord project(const LinearWord& w, const std::vector<Letter>& drop);
CyclicWord project(const CyclicWord& c, const std::vector<Letter>& drop);

// literal rim labelling: sigma on vertices in two or more inscribed cliques,
// the clique's letter on vertices of exactly one, epsilon elsewhere
LinearWord rim_word(const Multisun& m);
CyclicWord word_of_multisun(const Multisun& m);
// the s-word of m, defined when m satisfies the N-conditions
std::optional<CyclicWord> s_word_of_multisun(const Multisun& m);

}  // namespace balcheck
