#pragma once

#include <utility>
#include <vector>

#include "hsobstruct/numeric.hpp"
#include "hsobstruct/zlinalg.hpp"

namespace hsob {

/// The cubic t^3 - a t^2 + (a-1) t - 1 evaluated exactly.
Rat eval_cubic(const Int& a, const Rat& t);

/// Companion matrix of the cubic, last column (1, -(a-1), a); its
/// characteristic polynomial is the cubic and its determinant is 1.
IntMatrix companion_matrix(const Int& a);

/// Exact sign check placing the three real roots: the cubic is negative at
/// 1/a, positive at 1/2, negative at 1 - 1/a and a - 2, positive at a.
/// Requires a > 5 (at a = 5 the sign at 1/2 already fails).
bool verify_root_intervals(const Int& a);

/// c * |det(A^c - I)|: the order of the cyclic branched quotient of the
/// associated 2-knot group, exact. Requires a > 5, c >= 1.
Int quotient_order(const Int& a, unsigned long c);

/// The bound the quotient orders are measured against: c * a^(c-1).
Int order_bound(const Int& a, unsigned long c);

/// True iff the quotient orders of the given (a, c) pairs are pairwise
/// distinct. Requires a > 5 and a > 3c for every pair.
bool distinct_orders(const std::vector<std::pair<Int, unsigned long>>& pairs);

}  // namespace hsob
