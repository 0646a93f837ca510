#include "hsobstruct/forms.hpp"

#include <algorithm>

#include "hsobstruct/errors.hpp"

namespace hsob {

namespace {

// Sorts (i, j, k) ascending and returns the permutation sign, or 0 if two
// indices coincide.
int normalize_triple(int& i, int& j, int& k) {
    int sign = 1;
    if (i > j) { std::swap(i, j); sign = -sign; }
    if (j > k) { std::swap(j, k); sign = -sign; }
    if (i > j) { std::swap(i, j); sign = -sign; }
    if (i == j || j == k)
        return 0;
    return sign;
}

Int det3(const Int& a, const Int& b, const Int& c,
         const Int& d, const Int& e, const Int& f,
         const Int& g, const Int& h, const Int& i) {
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

}  // namespace

void AlternatingForm3::add_monomial(int i, int j, int k, const Int& c) {
    int sign = normalize_triple(i, j, k);
    if (sign == 0)
        throw BadParameter("wedge monomial indices must be distinct");
    if (i < 1 || static_cast<std::size_t>(k) > beta_)
        throw DimensionMismatch("monomial index out of range 1..beta");
    Key key{i, j, k};
    Int& slot = coeffs_[key];
    slot += sign * c;
    if (slot == 0)
        coeffs_.erase(key);
}

Int AlternatingForm3::coefficient(int i, int j, int k) const {
    int sign = normalize_triple(i, j, k);
    if (sign == 0)
        return 0;
    auto it = coeffs_.find(Key{i, j, k});
    if (it == coeffs_.end())
        return 0;
    return sign * it->second;
}

Int evaluate(const AlternatingForm3& f, const IntVec& u, const IntVec& v,
             const IntVec& w) {
    const std::size_t beta = f.beta();
    if (u.size() != beta || v.size() != beta || w.size() != beta)
        throw DimensionMismatch("argument length must equal beta");
    Int total = 0;
    for (const auto& [key, c] : f.monomials()) {
        const std::size_t i = key[0] - 1, j = key[1] - 1, k = key[2] - 1;
        total += c * det3(u[i], u[j], u[k],
                          v[i], v[j], v[k],
                          w[i], w[j], w[k]);
    }
    return total;
}

AlternatingForm3 restrict_to(const AlternatingForm3& f,
                             const std::vector<IntVec>& basis) {
    const std::size_t n = basis.size();
    for (const IntVec& b : basis)
        if (b.size() != f.beta())
            throw DimensionMismatch("basis vector length must equal beta");
    if (n > 0) {
        IntMatrix m = IntMatrix::from_rows(basis, f.beta());
        if (rank(m) != n)
            throw DependentInput("basis vectors are rationally dependent");
    }
    AlternatingForm3 out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Int c = evaluate(f, basis[i], basis[j], basis[k]);
                if (c != 0)
                    out.add_monomial(static_cast<int>(i) + 1,
                                     static_cast<int>(j) + 1,
                                     static_cast<int>(k) + 1, c);
            }
    return out;
}

bool is_zero(const AlternatingForm3& f) {
    return f.monomials().empty();
}

IntMatrix contraction_matrix(const AlternatingForm3& f) {
    const int beta = static_cast<int>(f.beta());
    const std::size_t pairs = beta >= 2
        ? static_cast<std::size_t>(beta) * (beta - 1) / 2 : 0;
    IntMatrix m(pairs, f.beta());
    std::size_t r = 0;
    for (int i = 1; i <= beta; ++i)
        for (int j = i + 1; j <= beta; ++j, ++r)
            for (int k = 1; k <= beta; ++k)
                m(r, k - 1) = f.coefficient(i, j, k);
    return m;
}

std::size_t cup_kernel_rank(const AlternatingForm3& f) {
    const std::size_t beta = f.beta();
    const std::size_t pairs = beta >= 2 ? beta * (beta - 1) / 2 : 0;
    return pairs - rank(contraction_matrix(f));
}

AlternatingForm3 change_basis(const AlternatingForm3& f, const IntMatrix& p) {
    if (!p.is_square() || p.rows() != f.beta())
        throw DimensionMismatch("basis change matrix must be beta x beta");
    Int d = det(p);
    if (d != 1 && d != -1)
        throw BadParameter("basis change matrix must be unimodular");
    std::vector<IntVec> cols;
    cols.reserve(p.cols());
    for (std::size_t j = 0; j < p.cols(); ++j)
        cols.push_back(p.col(j));
    return restrict_to(f, cols);
}

}  // namespace hsob
