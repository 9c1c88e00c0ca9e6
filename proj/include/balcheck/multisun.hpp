#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "balcheck/graph.hpp"

namespace balcheck {

class Multisun {
public:
    const Graph& graph() const { return graph_; }
    std::size_t order() const { return graph_.order(); }
    // Hamiltonian rim, from the smallest vertex towards its smaller rim neighbour
    const std::vector<Vertex>& rim() const { return rim_; }
    // maximal cliques of size >= 3, canonical order
    const std::vector<Clique>& cliques() const { return cliques_; }
    std::size_t clique_count() const { return cliques_.size(); }
    // common vertex of all inscribed cliques, only when there are at least two
    std::optional<Vertex> hub() const { return hub_; }
    // indices of the inscribed cliques through v
    const std::vector<std::size_t>& memberships(Vertex v) const { return member_[v]; }
    std::size_t rim_position(Vertex v) const { return position_[v]; }
    Vertex rim_next(Vertex v) const { return rim_[(position_[v] + 1) % rim_.size()]; }
    Vertex rim_prev(Vertex v) const {
        return rim_[(position_[v] + rim_.size() - 1) % rim_.size()];
    }

private:
    friend struct MultisunBuilder;
    Graph graph_;
    std::vector<Vertex> rim_;
    std::vector<Clique> cliques_;
    std::optional<Vertex> hub_;
    std::vector<std::vector<std::size_t>> member_;
    std::vector<std::size_t> position_;
};

enum class MultisunDefect {
    None,
    Empty,
    EvenOrder,
    Diamond,
    RimNotHamiltonian,
    NoInscribedClique
};

std::string to_string(MultisunDefect d);

struct MultisunRecognition {
    std::optional<Multisun> multisun;
    MultisunDefect defect = MultisunDefect::None;
    std::string detail;
    explicit operator bool() const { return multisun.has_value(); }
};

MultisunRecognition recognize_multisun(const Graph& g);

// C_n on 0..n-1 (in rim order) plus the given cliques
MultisunRecognition multisun_on_rim(std::size_t n, const std::vector<std::vector<Vertex>>& cliques);

// removed: proper subset of clique indices (empty allowed)
Multisun sub_multisun(const Multisun& m, const std::vector<std::size_t>& removed);
Graph graph_without_cliques(const Multisun& m, const std::vector<std::size_t>& removed);

enum class PathKind { A, AXi, AB };

std::string to_string(PathKind k);

// a rim subpath between two consecutive vertices that lie in inscribed cliques
struct PathReport {
    PathKind kind = PathKind::A;
    std::vector<Vertex> vertices;        // in rim order, endpoints included
    std::vector<std::size_t> cliques;    // one clique (shared) or two (one per endpoint)
    Vertex front() const { return vertices.front(); }
    Vertex back() const { return vertices.back(); }
    std::size_t vertex_count() const { return vertices.size(); }
};

// A: endpoints share a clique and neither is the hub; AXi: endpoints share a
// clique and one is the hub; AB: endpoints share no clique
std::vector<PathReport> rim_segments(const Multisun& m);

enum class ConditionStatus { Pass, Fail, NotApplicable };

std::string to_string(ConditionStatus s);

struct ConditionResult {
    ConditionStatus status = ConditionStatus::Pass;
    std::optional<PathReport> path;      // violating path
    std::vector<std::size_t> cliques;    // violating clique(s)
    std::string detail;
};

struct NConditionReport {
    std::array<ConditionResult, 5> conditions;
    std::optional<Vertex> hub;
    bool all_pass() const;
    // first failing condition as 1..5, 0 when all pass
    int first_failure() const;
};

NConditionReport check_n_conditions(const Multisun& m);

struct HohReport {
    bool free = true;
    std::vector<std::size_t> removed;  // clique indices of the offending sub-multisun
    std::optional<Hole> hole;
};

// brute force over the multisun and all its sub-multisuns
HohReport is_hoh_free(const Multisun& m);

// subdivide the rim edge uv with `count` new vertices (ids order .. order+count-1)
Multisun even_subdivide(const Multisun& m, Vertex u, Vertex v, std::size_t count);

// shorten the rim segment with endpoints u, v to new_length vertices, keeping parity;
// surviving vertices are renumbered densely preserving their relative order
Multisun even_contract(const Multisun& m, Vertex u, Vertex v, std::size_t new_length);

// contracts A- and AXi-paths to 4 vertices and AB-paths to 3; vertices are numbered
// along the rim from the hub (or the first clique vertex)
Multisun standardize(const Multisun& m);

// Splits a hole of a sub-multisun into its maximal rim subpaths. Each report
// lists the clique of the hole edge entering and leaving the path.
std::vector<PathReport> decompose_hole(const Multisun& m, const Hole& h);

// invariant under rim relabelling: order plus the sorted clique position sets,
// minimised over all rim rotations and reflections
struct MultisunKey {
    std::size_t order = 0;
    std::vector<std::vector<std::size_t>> cliques;
    auto operator<=>(const MultisunKey&) const = default;
};

MultisunKey canonical_key(const Multisun& m);

}  // namespace balcheck
