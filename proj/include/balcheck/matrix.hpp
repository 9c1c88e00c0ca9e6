#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "balcheck/graph.hpp"

namespace balcheck {

using Bits = boost::dynamic_bitset<>;

// Rows are stored as bitsets over the columns.
class ZeroOneMatrix {
public:
    ZeroOneMatrix() = default;
    ZeroOneMatrix(std::size_t rows, std::size_t cols);
    static ZeroOneMatrix from_rows(const std::vector<std::vector<int>>& entries);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    bool at(std::size_t r, std::size_t c) const { return rows_[r][c]; }
    void set(std::size_t r, std::size_t c, bool value = true) { rows_[r][c] = value; }
    const Bits& row(std::size_t r) const { return rows_[r]; }
    Bits column(std::size_t c) const;
    void append_row(const Bits& row);

    bool operator==(const ZeroOneMatrix& other) const {
        return cols_ == other.cols_ && rows_ == other.rows_;
    }

private:
    std::size_t cols_ = 0;
    std::vector<Bits> rows_;
};

// c_{i,j} = 1 iff j = i or j = i + 1 (mod n)
ZeroOneMatrix cycle_matrix(std::size_t n);

// rows: maximal cliques in canonical order, columns: vertices
ZeroOneMatrix clique_matrix(const Graph& g);

ZeroOneMatrix select_rows(const ZeroOneMatrix& m, const std::vector<std::size_t>& rows);
ZeroOneMatrix submatrix(const ZeroOneMatrix& m, const std::vector<std::size_t>& rows,
                        const std::vector<std::size_t>& cols);

bool is_linear(const ZeroOneMatrix& m);

struct UpMatrix {
    ZeroOneMatrix matrix;
    std::vector<std::size_t> rows;  // original index of each kept row
};

UpMatrix up_matrix(const ZeroOneMatrix& m);

// columns become vertices, adjacent iff they share a 1-row
Graph intersection_graph(const ZeroOneMatrix& m);

// rows are vertices 0..r-1, columns r..r+c-1
Graph bipartite_representation(const ZeroOneMatrix& m);

// rows[i] has its two 1s of the submatrix in cols[i] and cols[(i + 1) % k]
struct OddCycleCertificate {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    std::size_t order() const { return rows.size(); }
    bool operator==(const OddCycleCertificate&) const = default;
};

bool verify_certificate(const ZeroOneMatrix& m, const OddCycleCertificate& cert);

std::optional<OddCycleCertificate> find_triangle_submatrix(const ZeroOneMatrix& m);
bool is_conformal(const ZeroOneMatrix& m);

// least-order odd cycle submatrix, searched as a shortest chordless cycle of
// length 2 mod 4 in the bipartite representation
std::optional<OddCycleCertificate> min_odd_cycle(const ZeroOneMatrix& m);
bool is_balanced(const ZeroOneMatrix& m);

// Given columns c_0 .. c_{k-1} forming a hole in the intersection graph of the
// rows in `allowed`, pick for each hole edge a covering row; the result is an
// odd cycle submatrix when k is odd.
std::optional<OddCycleCertificate> certificate_from_hole(const ZeroOneMatrix& m,
                                                         const std::vector<std::size_t>& allowed,
                                                         const std::vector<std::size_t>& cols);

}  // namespace balcheck
