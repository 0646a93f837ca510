#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <vector>

#include "hsobstruct/numeric.hpp"
#include "hsobstruct/zlinalg.hpp"

namespace hsob {

/// Alternating integer trilinear form on Z^beta, stored sparsely as
/// coefficients on wedge monomials e_i ^ e_j ^ e_k with 1 <= i < j < k <= beta.
/// Zero coefficients are never stored.
class AlternatingForm3 {
public:
    using Key = std::array<int, 3>;  // strictly increasing, 1-based

    explicit AlternatingForm3(std::size_t beta) : beta_(beta) {}

    /// Adds c on the monomial (i, j, k); indices may come in any order and
    /// are normalized with the permutation sign. Repeated indices are an error.
    void add_monomial(int i, int j, int k, const Int& c);

    std::size_t beta() const { return beta_; }
    const std::map<Key, Int>& monomials() const { return coeffs_; }
    Int coefficient(int i, int j, int k) const;  // signed lookup

    bool operator==(const AlternatingForm3& rhs) const = default;

private:
    std::size_t beta_;
    std::map<Key, Int> coeffs_;
};

/// Full multilinear alternating evaluation on three coordinate vectors.
Int evaluate(const AlternatingForm3& f, const IntVec& u, const IntVec& v,
             const IntVec& w);

/// Pullback of f along the given vectors: the result has rank basis.size()
/// and coefficient evaluate(f, b_i, b_j, b_k) on (i, j, k). The vectors must
/// be rationally independent.
AlternatingForm3 restrict_to(const AlternatingForm3& f,
                             const std::vector<IntVec>& basis);

bool is_zero(const AlternatingForm3& f);

/// C(beta, 2) minus the rational rank of the contraction map sending a wedge
/// e_i ^ e_j to the functional c -> f(e_i, e_j, c).
std::size_t cup_kernel_rank(const AlternatingForm3& f);

/// Pullback along a square matrix with |det| = 1 (columns are the new basis).
AlternatingForm3 change_basis(const AlternatingForm3& f, const IntMatrix& p);

/// The contraction matrix itself, rows indexed by pairs (i < j) in
/// lexicographic order, columns by k. Exposed so independent rank oracles can
/// cross-check cup_kernel_rank.
IntMatrix contraction_matrix(const AlternatingForm3& f);

}  // namespace hsob
