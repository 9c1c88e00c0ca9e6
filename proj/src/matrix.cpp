#include "balcheck/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace balcheck {

ZeroOneMatrix::ZeroOneMatrix(std::size_t rows, std::size_t cols)
    : cols_(cols), rows_(rows, Bits(cols)) {}

ZeroOneMatrix ZeroOneMatrix::from_rows(const std::vector<std::vector<int>>& entries) {
    std::size_t cols = entries.empty() ? 0 : entries.front().size();
    ZeroOneMatrix m(entries.size(), cols);
    for (std::size_t r = 0; r < entries.size(); ++r) {
        if (entries[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) {
            if (entries[r][c] != 0 && entries[r][c] != 1)
                throw std::invalid_argument("matrix entries must be 0 or 1");
            m.set(r, c, entries[r][c] == 1);
        }
    }
    return m;
}

Bits ZeroOneMatrix::column(std::size_t c) const {
    Bits out(rows());
    for (std::size_t r = 0; r < rows(); ++r) out[r] = rows_[r][c];
    return out;
}

void ZeroOneMatrix::append_row(const Bits& row) {
    if (rows_.empty() && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
    rows_.push_back(row);
}

ZeroOneMatrix cycle_matrix(std::size_t n) {
    ZeroOneMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.set(i, i);
        m.set(i, (i + 1) % n);
    }
    return m;
}

ZeroOneMatrix clique_matrix(const Graph& g) {
    auto cliques = maximal_cliques(g);
    ZeroOneMatrix m(cliques.size(), g.order());
    for (std::size_t r = 0; r < cliques.size(); ++r)
        for (Vertex v : cliques[r]) m.set(r, v);
    return m;
}

ZeroOneMatrix select_rows(const ZeroOneMatrix& m, const std::vector<std::size_t>& rows) {
    ZeroOneMatrix out(0, m.cols());
    for (auto r : rows) out.append_row(m.row(r));
    return out;
}

ZeroOneMatrix submatrix(const ZeroOneMatrix& m, const std::vector<std::size_t>& rows,
                        const std::vector<std::size_t>& cols) {
    ZeroOneMatrix out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out.set(i, j, m.at(rows[i], cols[j]));
    return out;
}

bool is_linear(const ZeroOneMatrix& m) {
    for (std::size_t a = 0; a < m.rows(); ++a)
        for (std::size_t b = a + 1; b < m.rows(); ++b)
            if ((m.row(a) & m.row(b)).count() >= 2) return false;
    return true;
}

UpMatrix up_matrix(const ZeroOneMatrix& m) {
    UpMatrix out{ZeroOneMatrix(0, m.cols()), {}};
    for (std::size_t r = 0; r < m.rows(); ++r) {
        bool keep = true;
        for (std::size_t o = 0; o < m.rows() && keep; ++o) {
            if (o == r || !m.row(r).is_subset_of(m.row(o))) continue;
            // a strictly larger row dominates; among equal rows the first survives
            if (m.row(r) != m.row(o) || o < r) keep = false;
        }
        if (keep) {
            out.matrix.append_row(m.row(r));
            out.rows.push_back(r);
        }
    }
    return out;
}

Graph intersection_graph(const ZeroOneMatrix& m) {
    Graph g(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto cols = to_vector(m.row(r));
        for (std::size_t i = 0; i < cols.size(); ++i)
            for (std::size_t j = i + 1; j < cols.size(); ++j) g.add_edge(cols[i], cols[j]);
    }
    return g;
}

Graph bipartite_representation(const ZeroOneMatrix& m) {
    Graph g(m.rows() + m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (auto c = m.row(r).find_first(); c != Bits::npos; c = m.row(r).find_next(c))
            g.add_edge(r, m.rows() + c);
    return g;
}

bool verify_certificate(const ZeroOneMatrix& m, const OddCycleCertificate& cert) {
    const std::size_t k = cert.rows.size();
    if (k < 3 || k % 2 == 0 || cert.cols.size() != k) return false;
    for (auto r : cert.rows)
        if (r >= m.rows()) return false;
    for (auto c : cert.cols)
        if (c >= m.cols()) return false;
    auto distinct = [](std::vector<std::size_t> v) {
        std::sort(v.begin(), v.end());
        return std::adjacent_find(v.begin(), v.end()) == v.end();
    };
    if (!distinct(cert.rows) || !distinct(cert.cols)) return false;
    ZeroOneMatrix sub = submatrix(m, cert.rows, cert.cols);
    for (std::size_t i = 0; i < k; ++i) {
        if (sub.row(i).count() != 2 || sub.column(i).count() != 2) return false;
    }
    // two 1s per row and column: a disjoint union of even cycles, so one
    // component means one cycle
    return is_connected(bipartite_representation(sub));
}

std::optional<OddCycleCertificate> find_triangle_submatrix(const ZeroOneMatrix& m) {
    const std::size_t n = m.cols();
    std::vector<Bits> col(n);
    for (std::size_t c = 0; c < n; ++c) col[c] = m.column(c);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            Bits ab = col[a] & col[b];
            if (ab.none()) continue;
            for (std::size_t c = b + 1; c < n; ++c) {
                Bits r_ab = ab - col[c];
                if (r_ab.none()) continue;
                Bits r_bc = (col[b] & col[c]) - col[a];
                if (r_bc.none()) continue;
                Bits r_ca = (col[c] & col[a]) - col[b];
                if (r_ca.none()) continue;
                return OddCycleCertificate{{r_ab.find_first(), r_bc.find_first(), r_ca.find_first()},
                                           {a, b, c}};
            }
        }
    return std::nullopt;
}

bool is_conformal(const ZeroOneMatrix& m) {
    const std::size_t n = m.cols();
    std::vector<Bits> col(n);
    for (std::size_t c = 0; c < n; ++c) col[c] = m.column(c);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            Bits ab = col[a] & col[b];
            if (ab.none()) continue;
            for (std::size_t c = b + 1; c < n; ++c) {
                if ((ab - col[c]).none()) continue;
                if (((col[b] & col[c]) - col[a]).none()) continue;
                if (((col[c] & col[a]) - col[b]).none()) continue;
                if ((ab & col[c]).none()) return false;
            }
        }
    return true;
}

std::optional<OddCycleCertificate> min_odd_cycle(const ZeroOneMatrix& m) {
    if (m.rows() < 3 || m.cols() < 3) return std::nullopt;
    Graph b = bipartite_representation(m);
    auto hole = find_chordless_cycle(b, [](std::size_t len) { return len % 4 == 2; }, 6,
                                     CycleSearch::Shortest);
    if (!hole) return std::nullopt;
    // rows carry the smaller ids, so the walk is r_0 c_0 r_1 c_1 ... with r_i
    // meeting c_{i-1} and c_i
    const auto& w = hole->vertices;
    const std::size_t k = w.size() / 2;
    OddCycleCertificate cert;
    for (std::size_t i = 0; i < k; ++i) {
        cert.rows.push_back(w[2 * i]);
        cert.cols.push_back(w[(2 * i + 2 * k - 1) % (2 * k)] - m.rows());
    }
    return cert;
}

bool is_balanced(const ZeroOneMatrix& m) { return !min_odd_cycle(m).has_value(); }

std::optional<OddCycleCertificate> certificate_from_hole(const ZeroOneMatrix& m,
                                                         const std::vector<std::size_t>& allowed,
                                                         const std::vector<std::size_t>& cols) {
    const std::size_t k = cols.size();
    if (k < 3 || k % 2 == 0) return std::nullopt;
    Bits on_cycle(m.cols());
    for (auto c : cols) on_cycle.set(c);
    OddCycleCertificate cert{{}, cols};
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t a = cols[i], b = cols[(i + 1) % k];
        auto it = std::find_if(allowed.begin(), allowed.end(), [&](std::size_t r) {
            return m.at(r, a) && m.at(r, b) && (m.row(r) & on_cycle).count() == 2;
        });
        if (it == allowed.end()) return std::nullopt;
        cert.rows.push_back(*it);
    }
    if (!verify_certificate(m, cert)) return std::nullopt;
    return cert;
}

}  // namespace balcheck
