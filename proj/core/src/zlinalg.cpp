#include "hsobstruct/zlinalg.hpp"

#include <algorithm>
#include <utility>

#include "hsobstruct/errors.hpp"

namespace hsob {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw DimensionMismatch("entry count must equal rows * cols");
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw DimensionMismatch("row length mismatch");
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

IntVec IntMatrix::row(std::size_t i) const {
    IntVec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j)
        r[j] = (*this)(i, j);
    return r;
}

IntVec IntMatrix::col(std::size_t j) const {
    IntVec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        c[i] = (*this)(i, j);
    return c;
}

bool IntMatrix::is_symmetric() const {
    if (!is_square())
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i))
                return false;
    return true;
}

bool IntMatrix::is_zero() const {
    for (const Int& x : entries_)
        if (x != 0)
            return false;
    return true;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw DimensionMismatch("matrix product shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out(i, j) += a * rhs(k, j);
        }
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionMismatch("matrix difference shape mismatch");
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] = entries_[i] - rhs.entries_[i];
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out(j, i) = (*this)(i, j);
    return out;
}

IntMatrix IntMatrix::pow(unsigned long e) const {
    if (!is_square())
        throw NotSquare("matrix power needs a square matrix");
    IntMatrix acc = identity(rows_);
    IntMatrix base = *this;
    while (e > 0) {
        if (e & 1UL)
            acc = acc * base;
        base = base * base;
        e >>= 1UL;
    }
    return acc;
}

std::size_t SmithForm::rank() const {
    std::size_t r = 0;
    for (const Int& d : diagonal)
        if (d != 0)
            ++r;
    return r;
}

namespace {

// Elementary operations applied to the working matrix and mirrored into the
// transform accumulators. Column operations maintain v and v_inv together:
// m' = m e  =>  v' = v e, v_inv' = e^-1 v_inv.
struct SnfState {
    IntMatrix m, u, v, v_inv;

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
        for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u(a, j), u(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
        for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v(i, a), v(i, b));
        for (std::size_t j = 0; j < v_inv.cols(); ++j) std::swap(v_inv(a, j), v_inv(b, j));
    }
    void negate_row(std::size_t a) {
        for (std::size_t j = 0; j < m.cols(); ++j) m(a, j) = -m(a, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u(a, j) = -u(a, j);
    }
    // row[a] += q * row[b]
    void add_row(std::size_t a, std::size_t b, const Int& q) {
        if (q == 0) return;
        for (std::size_t j = 0; j < m.cols(); ++j) m(a, j) += q * m(b, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u(a, j) += q * u(b, j);
    }
    // col[a] += q * col[b]; inverse op on v_inv is row[b] -= q * row[a]
    void add_col(std::size_t a, std::size_t b, const Int& q) {
        if (q == 0) return;
        for (std::size_t i = 0; i < m.rows(); ++i) m(i, a) += q * m(i, b);
        for (std::size_t i = 0; i < v.rows(); ++i) v(i, a) += q * v(i, b);
        for (std::size_t j = 0; j < v_inv.cols(); ++j) v_inv(b, j) -= q * v_inv(a, j);
    }

    bool find_pivot(std::size_t t, std::size_t& pr, std::size_t& pc) const {
        bool found = false;
        Int best;
        for (std::size_t i = t; i < m.rows(); ++i)
            for (std::size_t j = t; j < m.cols(); ++j) {
                const Int& x = m(i, j);
                if (x == 0)
                    continue;
                Int a = abs(x);
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pr = i;
                    pc = j;
                }
            }
        return found;
    }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
    SnfState s{input, IntMatrix::identity(input.rows()),
               IntMatrix::identity(input.cols()),
               IntMatrix::identity(input.cols())};
    const std::size_t n = std::min(input.rows(), input.cols());

    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            std::size_t pr = 0, pc = 0;
            if (!s.find_pivot(t, pr, pc))
                goto done;  // remaining block is zero
            s.swap_rows(t, pr);
            s.swap_cols(t, pc);
            if (s.m(t, t) < 0)
                s.negate_row(t);

            // Reduce column t, then row t, modulo the pivot. Floor division
            // leaves remainders in [0, pivot); any nonzero remainder becomes
            // a strictly smaller pivot candidate on the next pass.
            bool clean = true;
            for (std::size_t i = t + 1; i < s.m.rows(); ++i) {
                if (s.m(i, t) == 0)
                    continue;
                s.add_row(i, t, -floordiv(s.m(i, t), s.m(t, t)));
                if (s.m(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < s.m.cols(); ++j) {
                if (s.m(t, j) == 0)
                    continue;
                s.add_col(j, t, -floordiv(s.m(t, j), s.m(t, t)));
                if (s.m(t, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue;

            // Divisibility sweep: the pivot must divide the rest of the block.
            bool fixed = false;
            for (std::size_t i = t + 1; i < s.m.rows() && !fixed; ++i)
                for (std::size_t j = t + 1; j < s.m.cols() && !fixed; ++j)
                    if (s.m(i, j) % s.m(t, t) != 0) {
                        s.add_row(t, i, 1);
                        fixed = true;
                    }
            if (!fixed)
                break;
        }
    }
done:
    SmithForm out;
    out.diagonal.resize(n);
    for (std::size_t t = 0; t < n; ++t)
        out.diagonal[t] = s.m(t, t);
    out.u = std::move(s.u);
    out.v = std::move(s.v);
    out.v_inv = std::move(s.v_inv);
    return out;
}

std::vector<IntVec> kernel_basis(const IntMatrix& m) {
    SmithForm snf = smith_normal_form(m);
    const std::size_t r = snf.rank();
    std::vector<IntVec> basis;
    basis.reserve(m.cols() - r);
    for (std::size_t j = r; j < m.cols(); ++j)
        basis.push_back(snf.v.col(j));
    return basis;
}

std::vector<IntVec> saturate(const std::vector<IntVec>& vectors,
                             std::size_t ambient_rank) {
    for (const IntVec& v : vectors)
        if (v.size() != ambient_rank)
            throw DimensionMismatch("vector length must equal ambient rank");
    IntMatrix m = IntMatrix::from_rows(vectors, ambient_rank);
    SmithForm snf = smith_normal_form(m);
    if (snf.rank() != vectors.size())
        throw DependentInput("input vectors are rationally dependent");
    // m = u^-1 [diag 0] v^-1, so the rational row span of m is spanned by the
    // first rank rows of v^-1; those rows are part of a basis of the ambient
    // lattice, hence span the saturation.
    std::vector<IntVec> out;
    out.reserve(vectors.size());
    for (std::size_t i = 0; i < vectors.size(); ++i)
        out.push_back(snf.v_inv.row(i));
    return out;
}

Int det(const IntMatrix& m) {
    if (!m.is_square())
        throw NotSquare("determinant needs a square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    // Bareiss fraction-free elimination.
    IntMatrix a = m;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a(piv, k) == 0)
                ++piv;
            if (piv == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(k, j), a(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                a(i, j) = num / prev;  // exact by Sylvester's identity
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m) {
    return smith_normal_form(m).rank();
}

IntVec apply(const IntMatrix& m, const IntVec& v) {
    if (v.size() != m.cols())
        throw DimensionMismatch("matrix-vector shape mismatch");
    IntVec out(m.rows(), Int(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i] += m(i, j) * v[j];
    return out;
}

}  // namespace hsob
