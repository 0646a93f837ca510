#include "hsobstruct/abelian.hpp"

#include "hsobstruct/errors.hpp"

namespace hsob {

namespace {

std::string constraint_string(std::size_t beta, std::size_t r) {
    const std::size_t choose2 = r * (r >= 1 ? r - 1 : 0) / 2;
    return "C(r,2) <= beta - r <= r with r = " + std::to_string(r) +
           ", beta = " + std::to_string(beta) + ": " + std::to_string(choose2) +
           " <= " + std::to_string(beta - r) + " <= " + std::to_string(r);
}

}  // namespace

std::vector<AbelianCandidate> abelian_feasibility(std::size_t beta) {
    std::vector<AbelianCandidate> out;
    switch (beta) {
        case 0:
            out.push_back({0, true, "Z/n", constraint_string(0, 0)});
            break;
        case 2:
            out.push_back({1, true, "Z + Z/n", constraint_string(2, 1)});
            break;
        case 1:
        case 3:
        case 4:
        case 6: {
            const std::size_t r = (beta + 1) / 2;
            std::string label = r == 1 ? "Z" : "Z^" + std::to_string(r);
            out.push_back({r, false, label, constraint_string(beta, r)});
            break;
        }
        default:
            break;  // beta = 5 or beta >= 7: no abelian pi_1(X) is possible
    }
    return out;
}

bool inequality_check(std::size_t beta, std::size_t r, bool torsion_nontrivial) {
    if (2 * r < beta)
        throw BadRank("rank must satisfy 2r >= beta");
    const std::size_t choose2 = r * (r >= 1 ? r - 1 : 0) / 2;
    if (beta < r)
        return false;
    if (!(choose2 <= beta - r && beta - r <= r))
        return false;
    if (torsion_nontrivial)
        return (r == 0 && beta == 0) || (r == 1 && beta == 2);
    return true;
}

}  // namespace hsob
