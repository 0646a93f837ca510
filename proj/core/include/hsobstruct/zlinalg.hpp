#pragma once

#include <cstddef>
#include <vector>

#include "hsobstruct/numeric.hpp"

namespace hsob {

/// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

    static IntMatrix identity(std::size_t n);
    /// Rows must all have the same length; `cols` disambiguates the empty case.
    static IntMatrix from_rows(const std::vector<IntVec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Int& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    Int& operator()(std::size_t i, std::size_t j) {
        return entries_[i * cols_ + j];
    }

    IntVec row(std::size_t i) const;
    IntVec col(std::size_t j) const;

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    bool is_zero() const;

    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& rhs) const = default;

    IntMatrix transpose() const;
    IntMatrix pow(unsigned long e) const;  // square matrices only

private:
    std::size_t rows_, cols_;
    std::vector<Int> entries_;
};

/// U * M * V = diag(diagonal), with U, V unimodular and d1 | d2 | ... >= 0.
/// v_inv is kept alongside V because callers routinely need rows of V^-1
/// (saturation, direct complements).
struct SmithForm {
    std::vector<Int> diagonal;  // length min(rows, cols)
    IntMatrix u;                // rows x rows
    IntMatrix v;                // cols x cols
    IntMatrix v_inv;            // v * v_inv = identity
    std::size_t rank() const;
};

/// Pivoting rule: smallest-magnitude nonzero entry, ties broken by lowest
/// (row, col), so results are reproducible across runs and platforms.
SmithForm smith_normal_form(const IntMatrix& m);

/// Basis of {v : m v = 0} as a saturated sublattice (a direct summand of
/// Z^cols). Vectors are returned as rows.
std::vector<IntVec> kernel_basis(const IntMatrix& m);

/// Smallest direct summand of Z^ambient_rank containing the span of the
/// input vectors. Throws DependentInput if the vectors are rationally
/// dependent.
std::vector<IntVec> saturate(const std::vector<IntVec>& vectors,
                             std::size_t ambient_rank);

/// Exact determinant (fraction-free elimination). Throws NotSquare.
Int det(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// Apply m to a column vector.
IntVec apply(const IntMatrix& m, const IntVec& v);

}  // namespace hsob
