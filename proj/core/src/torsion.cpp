#include "hsobstruct/torsion.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hsobstruct/errors.hpp"

namespace hsob {

FiniteAbelian::FiniteAbelian(std::vector<Int> invariant_factors)
    : factors_(std::move(invariant_factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] < 2)
            throw BadParameter("invariant factors must be >= 2");
        if (i > 0 && factors_[i] % factors_[i - 1] != 0)
            throw BadParameter("invariant factors must form a divisibility chain");
    }
}

Int FiniteAbelian::order() const {
    Int n = 1;
    for (const Int& d : factors_)
        n *= d;
    return n;
}

bool is_direct_double(const FiniteAbelian& g) {
    // Multiset of prime powers in the primary decomposition; the group is a
    // double iff every multiplicity is even.
    std::map<Int, unsigned long> multiplicity;
    for (const Int& d : g.invariant_factors()) {
        Int rest = d;
        for (Int p = 2; p * p <= rest;) {
            if (rest % p == 0) {
                Int q = 1;
                while (rest % p == 0) {
                    rest /= p;
                    q *= p;
                }
                ++multiplicity[q];
            }
            p = (p == 2) ? Int(3) : Int(p + 2);
        }
        if (rest > 1)
            ++multiplicity[rest];
    }
    for (const auto& [q, count] : multiplicity)
        if (count % 2 != 0)
            return false;
    return true;
}

void validate(const LinkingPairing& p) {
    const std::size_t k = p.group.invariant_factors().size();
    if (p.gram.size() != k)
        throw DimensionMismatch("gram size must match invariant factor count");
    for (std::size_t i = 0; i < k; ++i) {
        if (p.gram[i].size() != k)
            throw DimensionMismatch("gram matrix must be square");
        for (std::size_t j = 0; j < k; ++j) {
            const Rat& v = p.gram[i][j];
            if (v < 0 || v >= 1)
                throw BadParameter("gram entries must lie in [0, 1)");
            if (p.gram[i][j] != p.gram[j][i])
                throw NotSymmetric("linking pairing must be symmetric");
            Rat scaled = v * Rat(p.group.invariant_factors()[i]);
            if (scaled.get_den() != 1)
                throw BadParameter("pairing value incompatible with generator order");
        }
    }
}

namespace {

Rat mod1(const Rat& r) {
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return r - Rat(fl);
}

// Dense model of a small group: elements indexed by mixed-radix ids.
struct SmallGroup {
    const LinkingPairing& pairing;
    std::vector<long> factors;
    unsigned long order = 1;
    std::vector<GroupElement> elems;

    explicit SmallGroup(const LinkingPairing& p) : pairing(p) {
        for (const Int& d : p.group.invariant_factors())
            factors.push_back(d.get_si());
        for (long d : factors)
            order *= static_cast<unsigned long>(d);
        elems.resize(order);
        for (unsigned long id = 0; id < order; ++id) {
            GroupElement e(factors.size());
            unsigned long rest = id;
            for (std::size_t i = 0; i < factors.size(); ++i) {
                e[i] = static_cast<long>(rest % factors[i]);
                rest /= static_cast<unsigned long>(factors[i]);
            }
            elems[id] = std::move(e);
        }
    }

    unsigned long add(unsigned long a, unsigned long b) const {
        unsigned long id = 0, stride = 1;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            long s = (elems[a][i] + elems[b][i]) % factors[i];
            id += static_cast<unsigned long>(s) * stride;
            stride *= static_cast<unsigned long>(factors[i]);
        }
        return id;
    }

    bool pairs_to_zero(unsigned long a, unsigned long b) const {
        return pair_eval(pairing, elems[a], elems[b]) == 0;
    }
};

using IdSet = std::vector<unsigned long>;  // sorted element ids

// Closure of `base` and `g` under addition; nullopt once the size cap is hit.
std::optional<IdSet> close_subgroup(const SmallGroup& grp, const IdSet& base,
                                    unsigned long g, unsigned long size_cap) {
    std::vector<char> member(grp.order, 0);
    IdSet elements;
    auto push = [&](unsigned long id) {
        if (!member[id]) {
            member[id] = 1;
            elements.push_back(id);
        }
    };
    push(0);
    for (unsigned long id : base)
        push(id);
    push(g);
    for (std::size_t head = 0; head < elements.size(); ++head) {
        if (elements.size() > size_cap)
            return std::nullopt;
        for (std::size_t j = 0; j <= head; ++j)
            push(grp.add(elements[head], elements[j]));
    }
    if (elements.size() > size_cap)
        return std::nullopt;
    std::sort(elements.begin(), elements.end());
    return elements;
}

struct LagrangianSearch {
    const SmallGroup& grp;
    unsigned long target;  // sqrt(|G|)
    // Dedup applies to full-size candidates only; intermediate closures must
    // be revisited because different generating chains unlock different
    // extension ranges.
    std::set<IdSet> tried_lagrangian, tried_complement;
    std::vector<unsigned long> n_gens, c_gens;
    std::optional<LagrangianWitness> result;

    bool in(const IdSet& sorted, unsigned long id) const {
        return std::binary_search(sorted.begin(), sorted.end(), id);
    }

    // Order-`target` candidate meeting N trivially must also pair injectively
    // into Hom(N, Q/Z): every nonzero c sees some n with l(c, n) != 0.
    bool complement_ok(const IdSet& n_set, const IdSet& c_set) const {
        for (unsigned long c : c_set) {
            if (c == 0)
                continue;
            bool separated = false;
            for (unsigned long n : n_set)
                if (!grp.pairs_to_zero(c, n)) {
                    separated = true;
                    break;
                }
            if (!separated)
                return false;
        }
        return true;
    }

    bool search_complement(const IdSet& n_set, const IdSet& c_set,
                           unsigned long min_id) {
        if (c_set.size() == target) {
            if (!tried_complement.insert(c_set).second)
                return false;
            if (!complement_ok(n_set, c_set))
                return false;
            LagrangianWitness w;
            for (unsigned long id : n_gens)
                w.lagrangian_generators.push_back(grp.elems[id]);
            for (unsigned long id : c_gens)
                w.complement_generators.push_back(grp.elems[id]);
            result = std::move(w);
            return true;
        }
        for (unsigned long g = min_id; g < grp.order; ++g) {
            if (in(c_set, g) || in(n_set, g))
                continue;
            auto closed = close_subgroup(grp, c_set, g, target);
            if (!closed)
                continue;
            bool meets_n = false;
            for (unsigned long id : *closed)
                if (id != 0 && in(n_set, id)) {
                    meets_n = true;
                    break;
                }
            if (meets_n)
                continue;
            c_gens.push_back(g);
            if (search_complement(n_set, *closed, g + 1))
                return true;
            c_gens.pop_back();
        }
        return false;
    }

    bool search_lagrangian(const IdSet& n_set, unsigned long min_id) {
        if (n_set.size() == target) {
            if (!tried_lagrangian.insert(n_set).second)
                return false;
            tried_complement.clear();
            c_gens.clear();
            return search_complement(n_set, IdSet{0}, 1);
        }
        for (unsigned long g = min_id; g < grp.order; ++g) {
            if (in(n_set, g))
                continue;
            if (!grp.pairs_to_zero(g, g))
                continue;
            bool annihilates = true;
            for (unsigned long id : n_set)
                if (!grp.pairs_to_zero(g, id)) {
                    annihilates = false;
                    break;
                }
            if (!annihilates)
                continue;
            auto closed = close_subgroup(grp, n_set, g, target);
            if (!closed)
                continue;
            n_gens.push_back(g);
            if (search_lagrangian(*closed, g + 1))
                return true;
            n_gens.pop_back();
        }
        return false;
    }
};

}  // namespace

Rat pair_eval(const LinkingPairing& p, const GroupElement& x,
              const GroupElement& y) {
    const std::size_t k = p.group.invariant_factors().size();
    if (x.size() != k || y.size() != k)
        throw DimensionMismatch("element length must match invariant factor count");
    Rat total = 0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (x[i] != 0 && y[j] != 0)
                total += Rat(x[i]) * Rat(y[j]) * p.gram[i][j];
    return mod1(total);
}

std::optional<LagrangianWitness> is_hyperbolic(const LinkingPairing& p,
                                               unsigned long order_bound) {
    validate(p);
    Int order = p.group.order();
    if (order > Int(order_bound))
        throw TooLarge("group order exceeds the configured search bound");
    if (order == 1)
        return LagrangianWitness{};  // trivial pairing splits trivially

    Int root;
    mpz_sqrt(root.get_mpz_t(), order.get_mpz_t());
    if (root * root != order)
        return std::nullopt;  // |N|^2 = |G| is impossible

    SmallGroup grp(p);
    LagrangianSearch search{grp, root.get_ui(), {}, {}, {}, {}, std::nullopt};
    // The annihilation condition on generators propagates bilinearly to the
    // whole closure, so pruning by generators loses nothing.
    search.search_lagrangian(IdSet{0}, 1);
    return search.result;
}

}  // namespace hsob
