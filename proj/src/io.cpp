#include "balcheck/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace balcheck {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void bad(std::size_t line, const std::string& why) {
    throw ParseError("line " + std::to_string(line) + ": " + why);
}

std::size_t parse_index(const std::string& tok, std::size_t line) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        bad(line, "expected a non-negative integer, got '" + tok + "'");
    return v;
}

}  // namespace

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    std::optional<std::size_t> declared;
    std::vector<Edge> edges;
    std::size_t line = 0;
    bool seen_content = false;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = trim(raw.substr(0, raw.find('#')));
        if (s.empty()) continue;
        if (s.rfind("n=", 0) == 0) {
            if (seen_content) bad(line, "order header must come first");
            declared = parse_index(trim(s.substr(2)), line);
            seen_content = true;
            continue;
        }
        seen_content = true;
        std::istringstream fields(s);
        std::string a, b, extra;
        if (!(fields >> a >> b) || (fields >> extra)) bad(line, "expected 'u v'");
        std::size_t u = parse_index(a, line), v = parse_index(b, line);
        if (u == v) bad(line, "self-loop at vertex " + std::to_string(u));
        if (declared && std::max(u, v) >= *declared)
            bad(line, "vertex " + std::to_string(std::max(u, v)) + " beyond declared order " +
                          std::to_string(*declared));
        edges.emplace_back(u, v);
    }
    std::size_t order = declared.value_or(0);
    if (!declared)
        for (auto [u, v] : edges) order = std::max(order, std::max(u, v) + 1);
    return Graph(order, edges);
}

std::string render_graph(const Graph& g) {
    std::ostringstream out;
    out << "n=" << g.order() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

ZeroOneMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    std::vector<std::vector<int>> rows;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = trim(raw);
        if (s.empty() || s.front() == '#') continue;
        std::vector<int> row;
        for (char c : s) {
            if (c != '0' && c != '1') bad(line, std::string("unexpected character '") + c + "'");
            row.push_back(c - '0');
        }
        if (!rows.empty() && row.size() != rows.front().size())
            bad(line, "row length " + std::to_string(row.size()) + " differs from " +
                          std::to_string(rows.front().size()));
        rows.push_back(std::move(row));
    }
    return ZeroOneMatrix::from_rows(rows);
}

std::string render_matrix(const ZeroOneMatrix& m) {
    std::string out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out += m.at(r, c) ? '1' : '0';
        out += '\n';
    }
    return out;
}

LinearWord parse_word(const std::string& text) {
    std::string s = trim(text);
    if (s.empty()) throw ParseError("empty word");
    std::vector<Run> runs;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        Letter x;
        if (c == '*')
            x = Letter::sigma();
        else if (c == '.')
            x = Letter::epsilon();
        else if (c >= 'a' && c <= 'z')
            x = Letter::proper(static_cast<std::size_t>(c - 'a'));
        else
            throw ParseError("bad character '" + std::string(1, c) + "' at offset " +
                             std::to_string(i));
        ++i;
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        std::size_t exponent = 1;
        if (j > i) {
            auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + j, exponent);
            if (ec != std::errc() || ptr != s.data() + j)
                throw ParseError("bad exponent at offset " + std::to_string(i));
            if (exponent == 0) throw ParseError("zero exponent at offset " + std::to_string(i));
        }
        runs.push_back({x, exponent});
        i = j;
    }
    return LinearWord(runs);
}

char render_letter(Letter x) {
    if (x.is_sigma()) return '*';
    if (x.is_epsilon()) return '.';
    if (x.index() >= 26) throw std::out_of_range("more than 26 proper letters");
    return static_cast<char>('a' + x.index());
}

std::string render_word(const LinearWord& w) {
    std::string out;
    for (const auto& r : w.runs()) {
        out += render_letter(r.letter);
        if (r.exponent > 1) out += std::to_string(r.exponent);
    }
    return out;
}

std::string render_word(const CyclicWord& c) { return render_word(c.canonical()); }

std::string render_dot(const Graph& g, const Multisun* m) {
    static const char* palette[] = {"red", "blue", "darkgreen", "orange", "purple", "brown",
                                    "magenta", "cyan"};
    std::ostringstream out;
    out << "graph G {\n  node [shape=circle];\n";
    if (m && m->hub()) out << "  " << *m->hub() << " [style=filled, fillcolor=gold];\n";
    for (auto [u, v] : g.edges()) {
        out << "  " << u << " -- " << v;
        if (m) {
            std::optional<std::size_t> clique;
            for (auto c : m->memberships(u))
                if (std::binary_search(m->cliques()[c].begin(), m->cliques()[c].end(), v)) clique = c;
            if (clique) out << " [color=" << palette[*clique % 8] << "]";
            else out << " [penwidth=2]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace balcheck
