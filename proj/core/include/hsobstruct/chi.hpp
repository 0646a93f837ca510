#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace hsob {

enum class ChiStatus { Allowed, Excluded, Inconclusive };

const char* to_string(ChiStatus s);

/// One admissible chi(X) value together with the verdict the obstruction
/// passes have reached. Normalization chi(X) <= chi(Y) holds throughout, so
/// chi_x <= 1 and chi(Y) = 2 - chi_x.
struct ChiVerdict {
    long chi_x = 0;
    ChiStatus status = ChiStatus::Allowed;
    std::vector<std::string> reasons;  // tagged "code: explanation" strings

    long chi_y() const { return 2 - chi_x; }
};

/// gamma = beta_1(X) determined by chi(X) = 1 + beta - 2 gamma.
long gamma_for_chi(std::size_t beta, long chi_x);

/// All chi(X) with chi(X) == 1 + beta mod 2 in [1 - beta, 1], ascending,
/// each initially allowed. This is the raw Euler-characteristic bookkeeping
/// before any obstruction runs.
std::vector<ChiVerdict> lemma1_set(std::size_t beta);

/// Feasibility of the two-step nilpotent-quotient product condition for a
/// region with beta_1(X) = gamma >= beta/2: beta >= gamma*(beta - gamma),
/// with the (beta, gamma) = (4, 2) case excluded by a separate rank count.
/// True implies chi(X) is 1 - beta or 3 - beta.
bool theorem6_compatible(std::size_t beta, std::size_t gamma);

}  // namespace hsob
