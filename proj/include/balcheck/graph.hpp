#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace balcheck {

using Vertex = std::size_t;
using VertexSet = boost::dynamic_bitset<>;
using Edge = std::pair<Vertex, Vertex>;
using Clique = std::vector<Vertex>;  // sorted

class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t order);
    Graph(std::size_t order, const std::vector<Edge>& edges);

    static Graph cycle(std::size_t n);
    static Graph complete(std::size_t n);

    std::size_t order() const { return adj_.size(); }
    std::size_t size() const;

    Vertex add_vertex();
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);
    void add_clique(const std::vector<Vertex>& vs);

    bool adjacent(Vertex u, Vertex v) const { return adj_[u][v]; }
    const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
    std::size_t degree(Vertex v) const { return adj_[v].count(); }
    std::vector<Edge> edges() const;

    VertexSet empty_set() const { return VertexSet(order()); }

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    void check(Vertex v) const;
    std::vector<VertexSet> adj_;
};

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> original;  // new index -> old index
};

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices);
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices);

std::vector<Vertex> to_vector(const VertexSet& s);
bool is_connected(const Graph& g);

// diamond = K4 minus one edge; returned as {a, b, c, d} with cd the missing edge
std::optional<std::array<Vertex, 4>> find_diamond(const Graph& g);
bool is_diamond_free(const Graph& g);

// canonical order: each clique sorted, list sorted lexicographically
std::vector<Clique> maximal_cliques(const Graph& g);
bool is_clique(const Graph& g, const std::vector<Vertex>& vs);

struct Hole {
    std::vector<Vertex> vertices;  // cyclic order
    std::size_t length() const { return vertices.size(); }
    bool operator==(const Hole&) const = default;
};

enum class Parity { Any, Odd, Even };

enum class CycleSearch {
    Shortest,  // shortest accepted cycle, lexicographically least among those
    First      // any accepted cycle (existence test)
};

// Chordless cycles of length >= max(min_length, 4) whose length satisfies accept.
// Cycles are reported from their smallest vertex towards the smaller neighbour.
std::optional<Hole> find_chordless_cycle(const Graph& g,
                                         const std::function<bool(std::size_t)>& accept,
                                         std::size_t min_length,
                                         CycleSearch mode);

std::optional<Hole> find_hole(const Graph& g, Parity parity, std::size_t min_length = 4);
bool has_odd_hole(const Graph& g);

bool is_hole(const Graph& g, const std::vector<Vertex>& cycle);

}  // namespace balcheck
