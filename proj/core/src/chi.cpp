#include "hsobstruct/chi.hpp"

#include "hsobstruct/errors.hpp"

namespace hsob {

const char* to_string(ChiStatus s) {
    switch (s) {
        case ChiStatus::Allowed: return "allowed";
        case ChiStatus::Excluded: return "excluded";
        case ChiStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

long gamma_for_chi(std::size_t beta, long chi_x) {
    long num = 1 + static_cast<long>(beta) - chi_x;
    if (num < 0 || num % 2 != 0)
        throw BadParameter("chi value has the wrong parity for this beta");
    return num / 2;
}

std::vector<ChiVerdict> lemma1_set(std::size_t beta) {
    const long b = static_cast<long>(beta);
    std::vector<ChiVerdict> out;
    // chi(X) == 1 + beta mod 2 and 1 - beta <= chi(X) <= 1 (after choosing
    // chi(X) <= chi(Y), which is harmless since chi(X) + chi(Y) = 2).
    long start = 1 - b;
    for (long chi = start; chi <= 1; chi += 2)
        out.push_back(ChiVerdict{chi, ChiStatus::Allowed, {}});
    return out;
}

bool theorem6_compatible(std::size_t beta, std::size_t gamma) {
    if (2 * gamma < beta || gamma > beta)
        throw BadGamma("gamma must satisfy beta/2 <= gamma <= beta");
    const long b = static_cast<long>(beta);
    const long g = static_cast<long>(gamma);
    if (b < g * (b - g))
        return false;
    // beta = 4, gamma = 2 passes the inequality but fails the two-step
    // quotient rank count (the kernel needs rank >= 3, the product gives 2).
    if (beta == 4 && gamma == 2)
        return false;
    return true;
}

}  // namespace hsob
