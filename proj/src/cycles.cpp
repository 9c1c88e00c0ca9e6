#include "balcheck/graph.hpp"

#include <algorithm>

namespace balcheck {

namespace {

// Depth-first search over chordless paths v0 v1 ... vk with v0 the smallest
// vertex of the cycle and v1 smaller than the closing vertex, so every
// chordless cycle is met exactly once and in lexicographic order.
class ChordlessCycleFinder {
public:
    ChordlessCycleFinder(const Graph& g, const std::function<bool(std::size_t)>& accept,
                 std::size_t min_length, CycleSearch mode)
        : g_(g), accept_(accept), min_length_(std::max<std::size_t>(min_length, 4)), mode_(mode),
          n_(g.order()), closers_(n_), visited_(n_), frontier_(n_), next_(n_), through_(n_) {}

    std::optional<Hole> run() {
        for (v0_ = 0; v0_ < n_ && !done_; ++v0_) {
            closers_ = g_.neighbors(v0_);
            for (Vertex u = 0; u <= v0_; ++u) closers_.reset(u);
            if (closers_.count() < 2) continue;
            VertexSet base(n_);
            for (Vertex u = 0; u <= v0_; ++u) base.set(u);
            for (auto v1 = closers_.find_first(); v1 != VertexSet::npos && !done_;
                 v1 = closers_.find_next(v1)) {
                path_.assign({v0_, v1});
                VertexSet forbidden = base;
                forbidden.set(v1);
                extend(forbidden);
            }
        }
        return best_;
    }

private:
    void record(Vertex closing) {
        std::size_t len = path_.size() + 1;
        if (len < min_length_ || !accept_(len)) return;
        if (best_ && best_->length() <= len) return;
        Hole h{path_};
        h.vertices.push_back(closing);
        best_ = std::move(h);
        if (mode_ == CycleSearch::First) done_ = true;
    }

    // distance from w to a usable closing vertex through vertices outside
    // forbidden; 0 when unreachable
    std::size_t distance_to_close(Vertex w, const VertexSet& forbidden) {
        Vertex v1 = path_[1];
        through_ = forbidden;
        through_.flip();
        visited_.reset();
        visited_.set(w);
        frontier_.reset();
        frontier_.set(w);
        for (std::size_t d = 1; frontier_.any(); ++d) {
            next_.reset();
            for (auto v = frontier_.find_first(); v != VertexSet::npos; v = frontier_.find_next(v))
                next_ |= g_.neighbors(v);
            next_ &= through_;
            next_ -= visited_;
            if ((next_ & closers_).find_next(v1) != VertexSet::npos) return d;
            next_ -= closers_;
            visited_ |= next_;
            std::swap(frontier_, next_);
        }
        return 0;
    }

    void extend(const VertexSet& forbidden) {
        const Vertex last = path_.back();
        const std::size_t k = path_.size() - 1;
        VertexSet candidates = g_.neighbors(last) - forbidden;
        VertexSet deeper = forbidden | g_.neighbors(last);
        for (auto w = candidates.find_first(); w != VertexSet::npos && !done_;
             w = candidates.find_next(w)) {
            if (closers_[w]) {
                if (k >= 2 && w > path_[1]) record(w);
                continue;
            }
            std::size_t d = distance_to_close(w, deeper);
            if (d == 0) continue;
            if (best_ && k + 2 + d >= best_->length()) continue;
            path_.push_back(w);
            extend(deeper);
            path_.pop_back();
        }
    }

    const Graph& g_;
    const std::function<bool(std::size_t)>& accept_;
    std::size_t min_length_;
    CycleSearch mode_;
    std::size_t n_;
    Vertex v0_ = 0;
    std::vector<Vertex> path_;
    VertexSet closers_, visited_, frontier_, next_, through_;
    std::optional<Hole> best_;
    bool done_ = false;
};

}  // namespace

std::optional<Hole> find_chordless_cycle(const Graph& g,
                                         const std::function<bool(std::size_t)>& accept,
                                         std::size_t min_length, CycleSearch mode) {
    return ChordlessCycleFinder(g, accept, min_length, mode).run();
}

std::optional<Hole> find_hole(const Graph& g, Parity parity, std::size_t min_length) {
    auto accept = [parity](std::size_t len) {
        switch (parity) {
            case Parity::Odd: return len % 2 == 1;
            case Parity::Even: return len % 2 == 0;
            default: return true;
        }
    };
    return find_chordless_cycle(g, accept, min_length, CycleSearch::Shortest);
}

bool has_odd_hole(const Graph& g) {
    return find_chordless_cycle(g, [](std::size_t len) { return len % 2 == 1; }, 5,
                                CycleSearch::First)
        .has_value();
}

}  // namespace balcheck
