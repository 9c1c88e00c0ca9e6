#pragma once

#include <stdexcept>
#include <string>

#include "balcheck/graph.hpp"
#include "balcheck/matrix.hpp"
#include "balcheck/multisun.hpp"
#include "balcheck/words.hpp"

namespace balcheck {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// optional "n=<int>" header, then one "u v" edge per line; '#' starts a comment
Graph parse_graph(const std::string& text);
std::string render_graph(const Graph& g);

// one row per line over '0'/'1'; blank lines and '#' lines ignored
ZeroOneMatrix parse_matrix(const std::string& text);
std::string render_matrix(const ZeroOneMatrix& m);

// word := run+ ; run := letter digits? ; letter := '*' | '.' | 'a'..'z'
LinearWord parse_word(const std::string& text);
std::string render_word(const LinearWord& w);
std::string render_word(const CyclicWord& c);
char render_letter(Letter x);

// Graphviz; rim edges black, clique edges coloured per clique when m is given
std::string render_dot(const Graph& g, const Multisun* m = nullptr);

}  // namespace balcheck
