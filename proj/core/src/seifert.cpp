#include "hsobstruct/seifert.hpp"

#include <algorithm>

#include "hsobstruct/chi.hpp"
#include "hsobstruct/errors.hpp"
#include "hsobstruct/zlinalg.hpp"

namespace hsob {

void validate(const SeifertData& s) {
    for (const SeifertPair& p : s.pairs) {
        if (p.alpha < 1)
            throw BadParameter("cone order alpha must be >= 1");
        if (gcd(p.alpha, p.beta) != 1)
            throw BadParameter("Seifert pair must have gcd(alpha, beta) = 1");
    }
}

SeifertData normalized(const SeifertData& s) {
    validate(s);
    SeifertData out;
    out.genus = s.genus;
    Int bundle_e = 0;
    bool saw_bundle_pair = false;
    for (const SeifertPair& p : s.pairs) {
        if (p.alpha == 1) {
            bundle_e += p.beta;
            saw_bundle_pair = true;
        } else {
            out.pairs.push_back(p);
        }
    }
    if (saw_bundle_pair && bundle_e != 0)
        out.pairs.push_back(SeifertPair{1, bundle_e});
    std::sort(out.pairs.begin(), out.pairs.end(),
              [](const SeifertPair& a, const SeifertPair& b) {
                  if (a.alpha != b.alpha)
                      return a.alpha < b.alpha;
                  return a.beta < b.beta;
              });
    return out;
}

Rat euler_invariant(const SeifertData& s) {
    validate(s);
    Rat e = 0;
    for (const SeifertPair& p : s.pairs)
        e -= make_rat(p.beta, p.alpha);
    return e;
}

SeifertHomology homology(const SeifertData& s) {
    SeifertData n = normalized(s);
    const std::size_t r = n.pairs.size();
    std::size_t surface_gens;   // x_i, y_i for T_g, v_j for P_c
    bool orientable_base = n.genus >= 0;
    if (orientable_base)
        surface_gens = 2 * static_cast<std::size_t>(n.genus);
    else
        surface_gens = static_cast<std::size_t>(-n.genus);

    const std::size_t gens = surface_gens + r + 1;  // ... + c_i's + h
    const std::size_t rels = (orientable_base ? 1 : 2) + r;
    IntMatrix m(rels, gens);

    std::size_t row = 0;
    // Surface relation: orientable commutators abelianize away, leaving
    // sum(c_j) = 0; nonorientable leaves 2 sum(v_j) + sum(c_j) = 0.
    if (!orientable_base)
        for (std::size_t j = 0; j < surface_gens; ++j)
            m(row, j) = 2;
    for (std::size_t i = 0; i < r; ++i)
        m(row, surface_gens + i) = 1;
    ++row;
    for (std::size_t i = 0; i < r; ++i, ++row) {
        m(row, surface_gens + i) = n.pairs[i].alpha;
        m(row, gens - 1) = n.pairs[i].beta;
    }
    if (!orientable_base)
        m(row, gens - 1) = 2;  // fibre is reversed over the cross-caps

    SmithForm snf = smith_normal_form(m);
    SeifertHomology h;
    h.betti = gens - snf.rank();
    for (const Int& d : snf.diagonal)
        if (d > 1)
            h.torsion.push_back(d);
    return h;
}

SeifertObstruction obstruct(const SeifertData& s) {
    SeifertData n = normalized(s);
    SeifertHomology hom = homology(n);
    Rat eps = euler_invariant(n);

    SeifertObstruction out;
    out.betti = hom.betti;
    out.epsilon_zero = (eps == 0);

    if (n.genus < 0)
        return out;  // nonorientable base: cup products vanish, no exclusion here

    const long b = static_cast<long>(hom.betti);
    if (eps != 0) {
        for (const ChiVerdict& v : lemma1_set(hom.betti))
            if (v.chi_x != 1)
                out.exclusions.push_back(ChiExclusion{
                    v.chi_x,
                    "euler-nonzero-fibration: nonzero Euler invariant over an "
                    "orientable base forces chi(X) = chi(Y) = 1"});
    } else if (n.genus >= 1) {
        out.exclusions.push_back(ChiExclusion{
            1 - b,
            "zero-euler-fibre-class: the cup 3-form of a zero-Euler-invariant "
            "fibration over a positive-genus base is nonzero, so no "
            "complementary region has full rank"});
        for (const ChiVerdict& v : lemma1_set(hom.betti))
            if (v.chi_x < 0 && v.chi_x != 1 - b)
                out.fibre_image_notes.push_back(v.chi_x);
    }
    return out;
}

NonorientableCheck nonorientable_constraints(long c, const Int& e) {
    if (c < 1)
        throw BadParameter("cross-cap count must be >= 1");
    NonorientableCheck out;
    Int abs_e = abs(e);
    Int two_c = 2 * Int(c);
    // Sign of e is a choice of orientation, so the bound applies to |e|;
    // the mod-4 condition is sign-invariant.
    bool bound_ok = abs_e <= two_c;
    bool parity_ok = ((e - two_c) % 4) == 0;
    out.embeddable_normal_data = bound_ok && parity_ok;
    if (!out.embeddable_normal_data)
        return out;

    // chi(X) values realized by assembling projective-plane and torus blocks.
    long lo = 2 - c;
    Int half = abs_e / 2;
    long hi = 1;
    if (2 - half < 1)
        hi = static_cast<long>(Int(2 - half).get_si());
    for (long chi = lo; chi <= hi; ++chi)
        if (((chi - c) % 2) == 0)
            out.realizable_chi.push_back(chi);
    return out;
}

namespace {

// Multiset matching of the pairs into 2-element groups accepted by `ok`.
bool match_pairs(std::vector<SeifertPair> pairs,
                 bool (*ok)(const SeifertPair&, const SeifertPair&)) {
    if (pairs.size() % 2 != 0)
        return false;
    if (pairs.empty())
        return true;
    SeifertPair first = pairs.front();
    for (std::size_t i = 1; i < pairs.size(); ++i) {
        if (!ok(first, pairs[i]))
            continue;
        std::vector<SeifertPair> rest;
        for (std::size_t j = 1; j < pairs.size(); ++j)
            if (j != i)
                rest.push_back(pairs[j]);
        if (match_pairs(std::move(rest), ok))
            return true;
    }
    return false;
}

bool skew_partner(const SeifertPair& a, const SeifertPair& b) {
    return a.alpha == b.alpha && a.beta == -b.beta;
}

bool weak_skew_partner(const SeifertPair& a, const SeifertPair& b) {
    if (a.alpha != b.alpha)
        return false;
    Int bprime = -b.beta;
    if (bprime == a.beta)
        return true;
    return ((a.beta * bprime - 1) % a.alpha) == 0;
}

}  // namespace

SmoothReport smooth_obstructions(const SeifertData& s) {
    SeifertData n = normalized(s);
    SmoothReport out;
    out.skew_symmetric = match_pairs(n.pairs, skew_partner);
    out.weakly_skew_symmetric =
        out.skew_symmetric || match_pairs(n.pairs, weak_skew_partner);

    std::vector<Int> even_orders;
    for (const SeifertPair& p : n.pairs)
        if (p.alpha % 2 == 0)
            even_orders.push_back(p.alpha);
    if (n.genus >= 0) {
        out.even_cone_condition = true;
        for (const Int& a : even_orders)
            if (two_adic_valuation(a) != two_adic_valuation(even_orders.front()))
                out.even_cone_condition = false;
    } else {
        out.even_cone_condition = true;
        for (const Int& a : even_orders)
            if (a != even_orders.front())
                out.even_cone_condition = false;
    }

    Rat eps = euler_invariant(n);
    bool all_odd = even_orders.empty();
    if (n.genus >= 0) {
        if (eps == 0 && !out.skew_symmetric)
            out.conclusions.push_back(
                "no smooth embedding: zero Euler invariant requires "
                "skew-symmetric Seifert data");
        if (eps == 0 && out.skew_symmetric && all_odd)
            out.conclusions.push_back(
                "embeds smoothly: skew-symmetric data with all cone orders odd");
        if (!out.even_cone_condition)
            out.conclusions.push_back(
                "linking pairing cannot be hyperbolic: even cone orders have "
                "differing 2-adic valuations");
    } else {
        if (!out.weakly_skew_symmetric)
            out.conclusions.push_back(
                "no smooth embedding: nonorientable base requires weakly "
                "skew-symmetric Seifert data");
        else if (!out.even_cone_condition)
            out.conclusions.push_back(
                "no smooth embedding: even cone orders must all be equal over "
                "a nonorientable base");
    }
    return out;
}

}  // namespace hsob
