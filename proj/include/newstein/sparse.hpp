#pragma once

#include "newstein/scalar.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace newstein {

// Sorted by index, no stored zeros.
using SparseVector = std::vector<std::pair<int, Scalar>>;

// Sorts by index, merges duplicates, drops zeros.
void normalize(SparseVector& v);

// y += a * x, both normalized.
void axpy(SparseVector& y, const Scalar& a, const SparseVector& x);

Scalar coefficient(const SparseVector& v, int index);

// Column-major sparse matrix over Scalar.
class SparseExactMatrix {
public:
    SparseExactMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return static_cast<int>(columns_.size()); }
    std::size_t nnz() const;

    const SparseVector& column(int c) const { return columns_[c]; }
    const std::vector<SparseVector>& columns() const { return columns_; }

    // v must be normalized and in range; throws std::out_of_range otherwise.
    void set_column(int c, SparseVector v);
    Scalar entry(int r, int c) const;

    SparseExactMatrix operator*(const SparseExactMatrix& other) const;
    SparseVector apply(const SparseVector& x) const;
    SparseExactMatrix transpose() const;
    bool is_zero() const;

    bool operator==(const SparseExactMatrix& other) const = default;

private:
    int rows_;
    std::vector<SparseVector> columns_;
};

}  // namespace newstein
