#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hsobstruct/forms.hpp"
#include "hsobstruct/numeric.hpp"

namespace hsob {

/// Primitive integer functional Z^beta -> Z (gcd of entries is 1, so it is
/// surjective). Construction validates primitivity.
class Epimorphism {
public:
    explicit Epimorphism(IntVec lambda);
    const IntVec& lambda() const { return lambda_; }
    std::size_t size() const { return lambda_.size(); }

private:
    IntVec lambda_;
};

/// True iff f restricts to zero on the kernel lattice of lam.
bool vanishes_on_kernel(const AlternatingForm3& f, const Epimorphism& lam);

/// Enumerates primitive lambda with entries in [-radius, radius],
/// lexicographically, deduplicated up to sign (first nonzero entry positive);
/// returns the first one whose kernel kills f, or nullopt. A hit is a proof;
/// nullopt only means "not found within radius".
std::optional<Epimorphism> search_split_epi(const AlternatingForm3& f,
                                            int radius);

/// The rank-6 form e1^e2^e3 + e1^e5^e6 + e2^a4^e5 for which no balanced
/// splitting exists; the witness recipe below is specific to it.
AlternatingForm3 counterexample_form_beta6();
bool is_counterexample_form_beta6(const AlternatingForm3& f);

/// For every primitive lambda on Z^6 there is a rank-3 direct summand of
/// Ker(lambda) on which the counterexample form is nonzero. The summand is
/// produced by a closed-form case split on the first nonzero coefficient in
/// pivot order 6, 3, 4, 1, 2, 5; `value` is the (nonzero) form value on
/// `span_vectors`, a pure cube or square of that coefficient.
struct Beta6Witness {
    int pivot;                           // 1-based index of the pivot case
    std::vector<IntVec> span_vectors;    // three explicit kernel vectors
    std::vector<IntVec> summand_basis;   // saturation of their span
    Int value;                           // evaluate(f, span_vectors...)
};
Beta6Witness beta6_witness(const AlternatingForm3& f, const Epimorphism& lam);

/// A direct-sum decomposition Z^beta = A + B with both restrictions zero.
struct SplitWitness {
    std::vector<IntVec> a_basis;  // rank gamma, saturated
    std::vector<IntVec> b_basis;  // rank beta - gamma, complement
};

/// Bounded deterministic search: candidate A lattices are saturations of
/// gamma-tuples of primitive vectors with entries bounded by radius, the
/// complement is read off the Smith transforms, and the first candidate with
/// both restrictions zero wins. nullopt means "not found within the budget",
/// never "impossible".
std::optional<SplitWitness> find_splitting(const AlternatingForm3& f,
                                           std::size_t gamma, int radius,
                                           std::size_t node_budget = 500000);

/// Vector pool used by find_splitting: primitive, deduplicated up to sign,
/// ordered by max-norm shell, then support size, then lexicographically.
std::vector<IntVec> splitting_vector_pool(std::size_t beta, int radius);

}  // namespace hsob
