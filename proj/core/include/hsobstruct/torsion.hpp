#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hsobstruct/numeric.hpp"

namespace hsob {

/// Finite abelian group given by its invariant factors d1 | d2 | ..., each
/// >= 2. Construction validates the divisibility chain.
class FiniteAbelian {
public:
    FiniteAbelian() = default;
    explicit FiniteAbelian(std::vector<Int> invariant_factors);
    const std::vector<Int>& invariant_factors() const { return factors_; }
    Int order() const;

private:
    std::vector<Int> factors_;
};

/// True iff the group is isomorphic to tau + tau for some tau; equivalently
/// every prime power in the primary decomposition has even multiplicity.
bool is_direct_double(const FiniteAbelian& g);

/// Symmetric Q/Z-valued pairing on a finite abelian group, stored as the
/// matrix of values on the invariant-factor generators, entries in [0, 1).
/// Order compatibility d_i * gram[i][j] in Z is enforced.
struct LinkingPairing {
    FiniteAbelian group;
    std::vector<std::vector<Rat>> gram;
};

void validate(const LinkingPairing& p);

/// Element of the group as coefficients against the invariant-factor
/// generators, reduced mod d_i.
using GroupElement = std::vector<long>;

/// Pairing value on two elements, reduced into [0, 1).
Rat pair_eval(const LinkingPairing& p, const GroupElement& x,
              const GroupElement& y);

struct LagrangianWitness {
    std::vector<GroupElement> lagrangian_generators;
    std::vector<GroupElement> complement_generators;
};

/// Exhaustive search for a self-annihilating subgroup N with |N|^2 = |G|
/// admitting a complement C that the pairing maps isomorphically onto
/// Hom(N, Q/Z). nullopt is a proof of non-hyperbolicity (the search is
/// exhaustive); throws TooLarge above the order bound.
std::optional<LagrangianWitness> is_hyperbolic(const LinkingPairing& p,
                                               unsigned long order_bound = 10000);

}  // namespace hsob
