#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace hsob {

/// A candidate abelian pi_1(X), rank r plus optionally one cyclic torsion
/// summand with a free parameter n >= 1 (never enumerated).
struct AbelianCandidate {
    std::size_t rank = 0;
    bool cyclic_torsion_parameter = false;
    std::string label;       // "Z/n", "Z + Z/n", "Z", "Z^2", "Z^3"
    std::string constraint;  // the instantiated inequality C(r,2) <= beta-r <= r
};

/// Groups that can occur as an abelian pi_1(X): nonempty exactly for
/// beta in {0, 1, 2, 3, 4, 6}; free rank r = floor((beta+1)/2), torsion only
/// for beta = 0 (Z/n) and beta = 2 (Z + Z/n).
std::vector<AbelianCandidate> abelian_feasibility(std::size_t beta);

/// Raw rank inequality C(r,2) <= beta - r <= r together with the torsion
/// restriction: nontrivial (cyclic) torsion only for (r, beta) = (0, 0) or
/// (1, 2). Requires 2r >= beta.
bool inequality_check(std::size_t beta, std::size_t r, bool torsion_nontrivial);

}  // namespace hsob
