#include "hsobstruct/splitting.hpp"

#include <algorithm>

#include "hsobstruct/errors.hpp"
#include "hsobstruct/zlinalg.hpp"

namespace hsob {

Epimorphism::Epimorphism(IntVec lambda) : lambda_(std::move(lambda)) {
    if (lambda_.empty())
        throw BadParameter("epimorphism needs at least one coefficient");
    if (content(lambda_) != 1)
        throw BadParameter("epimorphism coefficients must have gcd 1");
}

bool vanishes_on_kernel(const AlternatingForm3& f, const Epimorphism& lam) {
    if (lam.size() != f.beta())
        throw DimensionMismatch("epimorphism length must equal beta");
    IntMatrix m = IntMatrix::from_rows({lam.lambda()}, lam.size());
    return is_zero(restrict_to(f, kernel_basis(m)));
}

namespace {

// Advances v through [-radius, radius]^n in lexicographic order.
bool next_tuple(std::vector<long>& v, long radius) {
    for (std::size_t i = v.size(); i-- > 0;) {
        if (v[i] < radius) {
            ++v[i];
            std::fill(v.begin() + static_cast<long>(i) + 1, v.end(), -radius);
            return true;
        }
    }
    return false;
}

bool first_nonzero_positive(const std::vector<long>& v) {
    for (long x : v) {
        if (x > 0) return true;
        if (x < 0) return false;
    }
    return false;  // all zero
}

IntVec to_intvec(const std::vector<long>& v) {
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = v[i];
    return out;
}

}  // namespace

std::optional<Epimorphism> search_split_epi(const AlternatingForm3& f,
                                            int radius) {
    if (radius < 1)
        throw BadParameter("radius must be at least 1");
    const std::size_t beta = f.beta();
    if (beta == 0)
        return std::nullopt;
    std::vector<long> v(beta, -radius);
    do {
        if (!first_nonzero_positive(v))
            continue;
        IntVec cand = to_intvec(v);
        if (content(cand) != 1)
            continue;
        Epimorphism lam(std::move(cand));
        if (vanishes_on_kernel(f, lam))
            return lam;
    } while (next_tuple(v, radius));
    return std::nullopt;
}

AlternatingForm3 counterexample_form_beta6() {
    AlternatingForm3 f(6);
    f.add_monomial(1, 2, 3, 1);
    f.add_monomial(1, 5, 6, 1);
    f.add_monomial(2, 4, 5, 1);
    return f;
}

bool is_counterexample_form_beta6(const AlternatingForm3& f) {
    return f.beta() == 6 && f == counterexample_form_beta6();
}

namespace {

IntVec unit_vector(std::size_t n, int index /*1-based*/) {
    IntVec v(n, Int(0));
    v[index - 1] = 1;
    return v;
}

// lambda[p] * e_j - lambda[j] * e_p  (1-based indices), a kernel vector.
IntVec pivot_vector(const IntVec& lam, int p, int j) {
    IntVec v(lam.size(), Int(0));
    v[j - 1] = lam[p - 1];
    v[p - 1] -= lam[j - 1];
    return v;
}

Int cube(const Int& x) { return x * x * x; }

}  // namespace

Beta6Witness beta6_witness(const AlternatingForm3& f, const Epimorphism& lam) {
    if (!is_counterexample_form_beta6(f))
        throw WrongForm("witness recipe applies only to the designated rank-6 form");
    if (lam.size() != 6)
        throw DimensionMismatch("epimorphism must have length 6");
    const IntVec& l = lam.lambda();

    Beta6Witness w;
    // Pivot order 6, 3, 4, 1, 2, 5: the first nonzero coefficient decides the
    // case. Each case hits exactly one monomial of the form, so the value is
    // a pure power of the pivot coefficient.
    if (l[5] != 0) {
        w.pivot = 6;
        w.span_vectors = {pivot_vector(l, 6, 1), pivot_vector(l, 6, 2),
                          pivot_vector(l, 6, 3)};
        w.value = cube(l[5]);
    } else if (l[2] != 0) {
        w.pivot = 3;
        w.span_vectors = {pivot_vector(l, 3, 1), pivot_vector(l, 3, 5),
                          pivot_vector(l, 3, 6)};
        w.value = cube(l[2]);
    } else if (l[3] != 0) {
        w.pivot = 4;
        w.span_vectors = {pivot_vector(l, 4, 1), pivot_vector(l, 4, 5),
                          pivot_vector(l, 4, 6)};
        w.value = cube(l[3]);
    } else if (l[0] != 0) {
        w.pivot = 1;
        w.span_vectors = {pivot_vector(l, 1, 2), unit_vector(6, 4),
                          pivot_vector(l, 1, 5)};
        w.value = l[0] * l[0];
    } else if (l[1] != 0) {
        w.pivot = 2;
        w.span_vectors = {pivot_vector(l, 2, 1), pivot_vector(l, 2, 5),
                          unit_vector(6, 6)};
        w.value = l[1] * l[1];
    } else {
        w.pivot = 5;
        w.span_vectors = {pivot_vector(l, 5, 1), pivot_vector(l, 5, 2),
                          unit_vector(6, 3)};
        w.value = l[4] * l[4];
    }
    w.summand_basis = saturate(w.span_vectors, 6);
    return w;
}

std::vector<IntVec> splitting_vector_pool(std::size_t beta, int radius) {
    if (radius < 1)
        throw BadParameter("radius must be at least 1");
    std::vector<IntVec> pool;
    for (int shell = 1; shell <= radius; ++shell) {
        std::vector<std::vector<long>> shell_sorted;
        std::vector<long> v(beta, -shell);
        do {
            if (!first_nonzero_positive(v))
                continue;
            long maxabs = 0;
            for (long x : v)
                maxabs = std::max(maxabs, std::abs(x));
            if (maxabs != shell)
                continue;  // belongs to an earlier shell
            IntVec cand = to_intvec(v);
            if (content(cand) != 1)
                continue;
            shell_sorted.push_back(v);
        } while (next_tuple(v, shell));
        std::stable_sort(shell_sorted.begin(), shell_sorted.end(),
                         [](const std::vector<long>& a, const std::vector<long>& b) {
                             std::size_t sa = 0, sb = 0;
                             for (long x : a) sa += (x != 0);
                             for (long x : b) sb += (x != 0);
                             if (sa != sb)
                                 return sa < sb;
                             return a < b;
                         });
        for (const auto& s : shell_sorted)
            pool.push_back(to_intvec(s));
    }
    return pool;
}

namespace {

// Incremental exact rank tracking: rows are kept fraction-free reduced; a new
// vector reducing to zero is dependent on the chosen prefix.
struct RankTracker {
    std::vector<IntVec> reduced;
    std::vector<std::size_t> pivot_cols;

    bool try_add(IntVec v) {
        for (std::size_t r = 0; r < reduced.size(); ++r) {
            const std::size_t pc = pivot_cols[r];
            if (v[pc] == 0)
                continue;
            const Int a = reduced[r][pc], b = v[pc];
            for (std::size_t j = 0; j < v.size(); ++j)
                v[j] = v[j] * a - reduced[r][j] * b;
        }
        std::size_t pc = v.size();
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) { pc = j; break; }
        if (pc == v.size())
            return false;
        Int g = content(v);
        if (g > 1)
            for (Int& x : v)
                x /= g;
        reduced.push_back(std::move(v));
        pivot_cols.push_back(pc);
        return true;
    }
    void pop() {
        reduced.pop_back();
        pivot_cols.pop_back();
    }
};

struct SplitSearch {
    const AlternatingForm3& f;
    const std::vector<IntVec>& pool;
    std::size_t gamma;
    std::size_t budget;
    std::vector<std::size_t> chosen;
    RankTracker tracker;
    std::optional<SplitWitness> result;

    bool spend() {
        if (budget == 0)
            return false;
        --budget;
        return true;
    }

    // All wedge triples among the chosen prefix that involve the newest
    // vector must already vanish; the rational span is unchanged by the
    // final saturation, so this prunes exactly the right subtrees.
    bool new_triples_vanish() const {
        const std::size_t t = chosen.size() - 1;
        if (t < 2)
            return true;
        for (std::size_t i = 0; i + 1 < t; ++i)
            for (std::size_t j = i + 1; j < t; ++j)
                if (evaluate(f, pool[chosen[i]], pool[chosen[j]],
                             pool[chosen[t]]) != 0)
                    return false;
        return true;
    }

    bool finish_candidate() {
        std::vector<IntVec> tuple;
        tuple.reserve(gamma);
        for (std::size_t idx : chosen)
            tuple.push_back(pool[idx]);
        IntMatrix m = IntMatrix::from_rows(tuple, f.beta());
        SmithForm snf = smith_normal_form(m);
        std::vector<IntVec> a_basis, b_basis;
        for (std::size_t i = 0; i < gamma; ++i)
            a_basis.push_back(snf.v_inv.row(i));
        for (std::size_t i = gamma; i < f.beta(); ++i)
            b_basis.push_back(snf.v_inv.row(i));
        if (!is_zero(restrict_to(f, a_basis)))
            return false;
        if (!is_zero(restrict_to(f, b_basis)))
            return false;
        result = SplitWitness{std::move(a_basis), std::move(b_basis)};
        return true;
    }

    bool recurse(std::size_t start) {
        if (chosen.size() == gamma)
            return finish_candidate();
        for (std::size_t i = start; i < pool.size(); ++i) {
            if (!spend())
                return false;
            if (!tracker.try_add(pool[i]))
                continue;
            chosen.push_back(i);
            if (new_triples_vanish() && recurse(i + 1))
                return true;
            chosen.pop_back();
            tracker.pop();
            if (result.has_value() || budget == 0)
                return result.has_value();
        }
        return false;
    }
};

}  // namespace

std::optional<SplitWitness> find_splitting(const AlternatingForm3& f,
                                           std::size_t gamma, int radius,
                                           std::size_t node_budget) {
    const std::size_t beta = f.beta();
    if (gamma > beta)
        throw BadParameter("gamma must satisfy 0 <= gamma <= beta");
    if (radius < 1)
        throw BadParameter("radius must be at least 1");

    // Rank-0 side: the other factor is the whole lattice.
    if (gamma == 0 || gamma == beta) {
        if (!is_zero(f) && beta >= 3)
            return std::nullopt;
        std::vector<IntVec> full;
        for (std::size_t i = 0; i < beta; ++i) {
            IntVec e(beta, Int(0));
            e[i] = 1;
            full.push_back(std::move(e));
        }
        std::vector<IntVec> empty;
        if (gamma == 0)
            return SplitWitness{empty, full};
        return SplitWitness{full, empty};
    }

    std::vector<IntVec> pool = splitting_vector_pool(beta, radius);
    SplitSearch search{f, pool, gamma, node_budget, {}, {}, std::nullopt};
    search.recurse(0);
    return search.result;
}

}  // namespace hsob
