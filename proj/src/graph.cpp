#include "balcheck/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace balcheck {

Graph::Graph(std::size_t order) : adj_(order, VertexSet(order)) {}

Graph::Graph(std::size_t order, const std::vector<Edge>& edges) : Graph(order) {
    for (auto [u, v] : edges) add_edge(u, v);
}

Graph Graph::cycle(std::size_t n) {
    Graph g(n);
    for (Vertex i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph Graph::complete(std::size_t n) {
    Graph g(n);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

void Graph::check(Vertex v) const {
    if (v >= order())
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                                std::to_string(order()));
}

std::size_t Graph::size() const {
    std::size_t twice = 0;
    for (const auto& row : adj_) twice += row.count();
    return twice / 2;
}

Vertex Graph::add_vertex() {
    for (auto& row : adj_) row.push_back(false);
    adj_.emplace_back(adj_.size() + 1);
    return adj_.size() - 1;
}

void Graph::add_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj_[u].set(v);
    adj_[v].set(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    adj_[u].reset(v);
    adj_[v].reset(u);
}

void Graph::add_clique(const std::vector<Vertex>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) add_edge(vs[i], vs[j]);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < order(); ++u)
        for (auto v = adj_[u].find_next(u); v != VertexSet::npos; v = adj_[u].find_next(v))
            out.emplace_back(u, v);
    return out;
}

std::vector<Vertex> to_vector(const VertexSet& s) {
    std::vector<Vertex> out;
    out.reserve(s.count());
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) out.push_back(v);
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices) {
    std::vector<Vertex> index(g.order(), g.order());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] >= g.order())
            throw std::out_of_range("vertex " + std::to_string(vertices[i]) + " out of range");
        if (index[vertices[i]] != g.order())
            throw std::invalid_argument("repeated vertex " + std::to_string(vertices[i]));
        index[vertices[i]] = i;
    }
    InducedSubgraph out{Graph(vertices.size()), vertices};
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (g.adjacent(vertices[i], vertices[j])) out.graph.add_edge(i, j);
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices) {
    return induced_subgraph(g, to_vector(vertices));
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    VertexSet seen = g.empty_set(), frontier = g.empty_set();
    seen.set(0);
    frontier.set(0);
    while (frontier.any()) {
        VertexSet next = g.empty_set();
        for (auto v = frontier.find_first(); v != VertexSet::npos; v = frontier.find_next(v))
            next |= g.neighbors(v);
        next -= seen;
        seen |= next;
        frontier = std::move(next);
    }
    return seen.all();
}

std::optional<std::array<Vertex, 4>> find_diamond(const Graph& g) {
    // an edge ab whose common neighbourhood contains two non-adjacent vertices
    for (auto [a, b] : g.edges()) {
        VertexSet common = g.neighbors(a) & g.neighbors(b);
        for (auto c = common.find_first(); c != VertexSet::npos; c = common.find_next(c)) {
            VertexSet rest = common - g.neighbors(c);
            rest.reset(c);
            auto d = rest.find_next(c);
            if (d != VertexSet::npos) return std::array<Vertex, 4>{a, b, c, d};
        }
    }
    return std::nullopt;
}

bool is_diamond_free(const Graph& g) { return !find_diamond(g).has_value(); }

bool is_clique(const Graph& g, const std::vector<Vertex>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (vs[i] == vs[j] || !g.adjacent(vs[i], vs[j])) return false;
    return true;
}

bool is_hole(const Graph& g, const std::vector<Vertex>& cycle) {
    const std::size_t k = cycle.size();
    if (k < 4) return false;
    for (Vertex v : cycle)
        if (v >= g.order()) return false;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            if (cycle[i] == cycle[j]) return false;
            bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
        }
    return true;
}

}  // namespace balcheck
