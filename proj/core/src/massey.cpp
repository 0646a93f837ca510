#include "hsobstruct/massey.hpp"

#include "hsobstruct/errors.hpp"

namespace hsob {

NilElement nil_identity(long e) {
    if (e < 1)
        throw BadParameter("central extension parameter e must be >= 1");
    return NilElement{0, 0, 0, e};
}

NilElement nil_mul(const NilElement& g, const NilElement& h) {
    if (g.e != h.e)
        throw MixedGroups("cannot multiply elements of different extensions");
    return NilElement{g.m + h.m, g.n + h.n, g.p + h.p - g.e * g.n * h.m, g.e};
}

NilElement nil_inverse(const NilElement& g) {
    return NilElement{-g.m, -g.n, -g.p - g.e * g.m * g.n, g.e};
}

bool operator==(const NilElement& a, const NilElement& b) {
    return a.e == b.e && a.m == b.m && a.n == b.n && a.p == b.p;
}

NilCochains cochains(long e) {
    if (e < 1)
        throw BadParameter("central extension parameter e must be >= 1");
    // Explicit -> Rat return types force evaluation of the gmp expression
    // templates while their operands are still alive.
    NilCochains c;
    c.xi = [](const NilElement& g) -> Rat { return Rat(g.m); };
    c.eta = [](const NilElement& g) -> Rat { return Rat(g.n); };
    c.phi_xi = [](const NilElement& g) -> Rat {
        return Rat(g.m * (1 - g.m)) / 2;
    };
    c.phi_eta = [](const NilElement& g) -> Rat {
        return Rat(g.n * (1 - g.n)) / 2;
    };
    c.theta = [e](const NilElement& g) -> Rat {
        return Rat(-g.m * g.n) - make_rat(g.p, e);
    };
    return c;
}

Cochain2 coboundary1(Cochain1 f) {
    return [f](const NilElement& g, const NilElement& h) -> Rat {
        return f(g) + f(h) - f(nil_mul(g, h));
    };
}

Cochain2 cup(Cochain1 u, Cochain1 v) {
    return [u, v](const NilElement& g, const NilElement& h) -> Rat {
        return u(g) * v(h);
    };
}

std::pair<Cochain2, Cochain2> triple_product_cocycles(long e) {
    NilCochains c = cochains(e);
    Cochain2 c1 = [c](const NilElement& g, const NilElement& h) -> Rat {
        return c.phi_xi(g) * c.eta(h) + c.xi(g) * c.theta(h);
    };
    Cochain2 c2 = [c](const NilElement& g, const NilElement& h) -> Rat {
        return c.theta(g) * c.eta(h) + c.xi(g) * c.phi_eta(h);
    };
    return {c1, c2};
}

Rat cocycle_defect(const Cochain2& c, const NilElement& g, const NilElement& h,
                   const NilElement& k) {
    return c(h, k) - c(nil_mul(g, h), k) + c(g, nil_mul(h, k)) - c(g, h);
}

namespace {

// Antisymmetrization c(g,h) - c(h,g) scanned over one abelian subgroup;
// returns true iff some pair is nonzero. On an abelian subgroup this is a
// coboundary-invariant pairing, so a nonzero value certifies a nonzero
// cohomology class there.
bool antisym_nonzero_on(const Cochain2& c, long e, bool x_subgroup) {
    for (long a = -3; a <= 3; ++a)
        for (long p = -3; p <= 3; ++p)
            for (long b = -3; b <= 3; ++b)
                for (long q = -3; q <= 3; ++q) {
                    NilElement g = x_subgroup ? NilElement{a, 0, p, e}
                                              : NilElement{0, a, p, e};
                    NilElement h = x_subgroup ? NilElement{b, 0, q, e}
                                              : NilElement{0, b, q, e};
                    if (c(g, h) - c(h, g) != 0)
                        return true;
                }
    return false;
}

}  // namespace

bool restriction_independence(long e) {
    auto [c1, c2] = triple_product_cocycles(e);
    bool c1_on_x = antisym_nonzero_on(c1, e, true);
    bool c1_on_y = antisym_nonzero_on(c1, e, false);
    bool c2_on_x = antisym_nonzero_on(c2, e, true);
    bool c2_on_y = antisym_nonzero_on(c2, e, false);
    return c1_on_x && !c1_on_y && !c2_on_x && c2_on_y;
}

}  // namespace hsob
