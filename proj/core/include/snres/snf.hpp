#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "snres/group_ring.hpp"

namespace snres {

// Sparse integer matrix stored by columns; entries are (row, value), no zeros.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), col_(cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    void add(std::size_t r, std::size_t c, const Int& v);  // accumulates
    void append_column(std::vector<std::pair<std::size_t, Int>> entries);
    const std::vector<std::pair<std::size_t, Int>>& column(std::size_t c) const { return col_[c]; }
    std::size_t nnz() const;
    Int at(std::size_t r, std::size_t c) const;
    IntMatrix transpose() const;
    void finalize();  // sort and merge each column

    IntMatrix multiply(const IntMatrix& o) const;
    bool is_zero() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::vector<std::pair<std::size_t, Int>>> col_;
};

struct AbelianGroupInfo {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;  // d1 | d2 | ..., each >= 2
    std::string str() const;  // "Z^2 + Z/2 + Z/12"
    Int torsion_order() const;
    friend bool operator==(const AbelianGroupInfo&, const AbelianGroupInfo&) = default;
};

struct SmithResult {
    std::size_t rank = 0;
    std::vector<Int> invariant_factors;  // nonunit elementary divisors, divisibility chain
};

// Elementary divisors from an arbitrary list of nonzero diagonal entries.
std::vector<Int> invariant_factors_from_diagonal(const std::vector<Int>& diag);
AbelianGroupInfo group_from_factors(std::size_t free_rank, const std::vector<Int>& factors);

SmithResult smith_normal_form(const IntMatrix& m);

// Dense Smith form with witnesses: U * A * V = D, with Uinv = U^{-1}.
using DenseMatrix = std::vector<std::vector<Int>>;
struct DenseSmith {
    DenseMatrix U, Uinv, V, D;
    std::size_t rank = 0;
    std::vector<Int> diag;  // D[i][i] for i < rank, each positive, d_i | d_{i+1}
};
DenseMatrix to_dense(const IntMatrix& m);
DenseMatrix dense_multiply(const DenseMatrix& a, const DenseMatrix& b);
DenseSmith dense_smith(const DenseMatrix& a, std::size_t rows, std::size_t cols);

}  // namespace snres
