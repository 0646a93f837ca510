#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hsobstruct/numeric.hpp"

namespace hsob {

/// One exceptional-fibre invariant (alpha, beta) with alpha >= 1 and
/// gcd(alpha, beta) = 1. alpha = 1 encodes the bundle part of the data.
struct SeifertPair {
    Int alpha;
    Int beta;
};

/// Seifert fibred 3-manifold with orientable total space.
/// genus >= 0: orientable base of that genus; genus = -c < 0: nonorientable
/// base with c cross-caps.
struct SeifertData {
    long genus = 0;
    std::vector<SeifertPair> pairs;
};

/// Validates alpha/gcd constraints; throws BadParameter.
void validate(const SeifertData& s);

/// Merges all alpha = 1 pairs by summing their beta entries (fibre-sum
/// convention), drops the merged pair when its beta is 0, and sorts the
/// remaining pairs. Two inputs describing the same bundle normalize
/// identically.
SeifertData normalized(const SeifertData& s);

/// Generalized Euler invariant -sum(beta_i / alpha_i), exact.
Rat euler_invariant(const SeifertData& s);

struct SeifertHomology {
    std::size_t betti = 0;
    std::vector<Int> torsion;  // invariant factors > 1, divisibility chain
};

/// Abelianization of the standard presentation. Orientable base: generators
/// x_1, y_1, ..., x_g, y_g, c_1, ..., c_r, h with relations sum(c_j) = 0 and
/// alpha_i c_i + beta_i h = 0. Nonorientable base with c cross-caps:
/// generators v_1, ..., v_c, c_1, ..., c_r, h with the cross-cap relation
/// 2 sum(v_j) + sum(c_j) = 0, the pair relations, and 2h = 0 from the
/// orientation-reversing action on the fibre.
SeifertHomology homology(const SeifertData& s);

/// One chi(X) value ruled out, with the tagged reason for the report table.
struct ChiExclusion {
    long chi_x;
    std::string reason;
};

struct SeifertObstruction {
    std::size_t betti = 0;
    bool epsilon_zero = true;
    std::vector<ChiExclusion> exclusions;
    /// chi values for which the regular fibre must survive in H_1(Y;Q).
    std::vector<long> fibre_image_notes;
};

/// Orientable base, epsilon = 0, genus >= 1: chi(X) = 1 - beta is impossible.
/// Orientable base, epsilon != 0: only chi(X) = 1 survives. Nonorientable
/// base: no exclusions from this pass (all degree-1 cup products vanish).
SeifertObstruction obstruct(const SeifertData& s);

struct NonorientableCheck {
    bool embeddable_normal_data = false;
    /// chi(X) values realized by the block construction when the data is
    /// admissible: 2 - c <= chi <= min(2 - |e|/2, 1), chi == c mod 2.
    std::vector<long> realizable_chi;
};

/// Normal-data test for the circle bundle over the c-cross-cap surface with
/// pair (1, e): requires |e| <= 2c and e == 2c mod 4.
NonorientableCheck nonorientable_constraints(long c, const Int& e);

struct SmoothReport {
    bool skew_symmetric = false;
    bool weakly_skew_symmetric = false;
    bool even_cone_condition = false;
    std::vector<std::string> conclusions;
};

/// Smooth-embedding predicates: skew-symmetric data pairs {(a,b),(a,-b)};
/// weakly skew-symmetric allows {(a,b),(a,-b')} with b' = b or bb' == 1
/// mod a; the even-cone condition asks all even cone orders to share their
/// 2-adic valuation (orientable base) or to be equal (nonorientable base).
SmoothReport smooth_obstructions(const SeifertData& s);

}  // namespace hsob
