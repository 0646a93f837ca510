#include "hsobstruct/csknot.hpp"

#include <set>

#include "hsobstruct/errors.hpp"

namespace hsob {

Rat eval_cubic(const Int& a, const Rat& t) {
    return t * t * t - Rat(a) * t * t + Rat(a - 1) * t - 1;
}

IntMatrix companion_matrix(const Int& a) {
    IntMatrix m(3, 3);
    m(0, 2) = 1;
    m(1, 0) = 1;
    m(1, 2) = -(a - 1);
    m(2, 1) = 1;
    m(2, 2) = a;
    return m;
}

bool verify_root_intervals(const Int& a) {
    if (a <= 5)
        throw BadParameter("root interval bounds need a > 5");
    const Rat one_over_a = make_rat(1, a);
    bool ok = eval_cubic(a, one_over_a) < 0;
    ok = ok && eval_cubic(a, make_rat(1, 2)) > 0;
    ok = ok && eval_cubic(a, Rat(1) - one_over_a) < 0;
    ok = ok && eval_cubic(a, Rat(a - 2)) < 0;
    ok = ok && eval_cubic(a, Rat(a)) > 0;
    return ok;
}

Int quotient_order(const Int& a, unsigned long c) {
    if (a <= 5)
        throw BadParameter("quotient orders need a > 5");
    if (c < 1)
        throw BadParameter("exponent c must be >= 1");
    IntMatrix power = companion_matrix(a).pow(c);
    Int d = det(power - IntMatrix::identity(3));
    return Int(c) * abs(d);
}

Int order_bound(const Int& a, unsigned long c) {
    Int p;
    mpz_pow_ui(p.get_mpz_t(), a.get_mpz_t(), c - 1);
    return Int(c) * p;
}

bool distinct_orders(const std::vector<std::pair<Int, unsigned long>>& pairs) {
    std::set<Int> orders;
    for (const auto& [a, c] : pairs) {
        if (a <= Int(3) * Int(c) || a <= 5)
            throw BadParameter("pairs must satisfy a > 3c and a > 5");
        if (!orders.insert(quotient_order(a, c)).second)
            return false;
    }
    return true;
}

}  // namespace hsob
