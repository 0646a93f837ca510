#pragma once

#include <functional>
#include <utility>

#include "hsobstruct/numeric.hpp"

namespace hsob {

/// Element x^m y^n t^p of the central extension <x, y, t | [x,y] = t^e,
/// t central> in normal form. e = 1 recovers the integer Heisenberg group.
struct NilElement {
    Int m, n, p;
    long e = 1;
};

NilElement nil_identity(long e);

/// Normal-form product: (m,n,p)(m',n',p') = (m+m', n+n', p+p' - e n m'),
/// the unique law with t^e = x y x^-1 y^-1 central.
NilElement nil_mul(const NilElement& g, const NilElement& h);

NilElement nil_inverse(const NilElement& g);

bool operator==(const NilElement& a, const NilElement& b);

/// Inhomogeneous cochains with values in the trivial module Q.
using Cochain1 = std::function<Rat(const NilElement&)>;
using Cochain2 = std::function<Rat(const NilElement&, const NilElement&)>;

/// The explicit 1-cochains: xi(g) = m and eta(g) = n (the degree-1 classes),
/// phi_xi(g) = m(1-m)/2, phi_eta(g) = n(1-n)/2, theta(g) = -mn - p/e. Their
/// coboundaries are the cup squares/products: d(phi_xi) = xi xi,
/// d(phi_eta) = eta eta, d(theta) = xi eta.
struct NilCochains {
    Cochain1 xi, eta, phi_xi, phi_eta, theta;
};
NilCochains cochains(long e);

/// d f (g, h) = f(g) + f(h) - f(gh), trivial coefficients.
Cochain2 coboundary1(Cochain1 f);

/// Cup product of 1-cochains: (u v)(g, h) = u(g) v(h).
Cochain2 cup(Cochain1 u, Cochain1 v);

/// 2-cocycles phi_xi eta + xi theta and theta eta + xi phi_eta representing
/// the triple products <xi, xi, eta> and <xi, eta, eta>.
std::pair<Cochain2, Cochain2> triple_product_cocycles(long e);

/// d c (g, h, k) = c(h, k) - c(gh, k) + c(g, hk) - c(g, h); zero for the
/// triple-product cocycles.
Rat cocycle_defect(const Cochain2& c, const NilElement& g, const NilElement& h,
                   const NilElement& k);

/// Certifies linear independence of the two triple-product classes by their
/// antisymmetrizations on the abelian subgroups <x, t> and <y, t>: the first
/// cocycle is nonzero on the first subgroup and vanishes identically on the
/// second, and vice versa. Scans the grid |m|, |n|, |p| <= 3.
bool restriction_independence(long e);

}  // namespace hsob
