#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hsobstruct/abelian.hpp"
#include "hsobstruct/chi.hpp"
#include "hsobstruct/io.hpp"
#include "hsobstruct/seifert.hpp"
#include "hsobstruct/splitting.hpp"

namespace hsob {

inline constexpr const char* kToolVersion = "0.1.0";

/// H_1 of the manifold obtained by surgery on a link with the given
/// (symmetric) linking/framing matrix: betti = nullity, torsion from the
/// Smith diagonal. Throws NotSymmetric.
SeifertHomology homology_from_linking_matrix(const IntMatrix& m);

struct TorsionSummary {
    std::vector<Int> factors;
    std::optional<bool> direct_double;
    std::optional<bool> hyperbolic;  // decided only for pairing inputs
    std::vector<std::string> notes;
};

/// Aggregated verdicts for one manifold description. "Allowed" always means
/// "not excluded by any implemented obstruction", never "realizable";
/// inconclusive rows are never upgraded to excluded without a certificate.
struct ObstructionReport {
    ManifoldInput input;
    int radius = 3;
    std::optional<std::size_t> beta;
    TorsionSummary torsion;
    std::vector<ChiVerdict> chi_table;
    std::map<long, SplitWitness> split_witnesses;  // keyed by chi(X)
    std::optional<Rat> epsilon;
    std::optional<SmoothReport> smooth;
    std::optional<NonorientableCheck> nonorientable;
    std::optional<std::size_t> cup_kernel;
    std::vector<AbelianCandidate> abelian_pi1;
    bool non_embeddable = false;
    std::vector<std::string> non_embeddable_reasons;
};

/// Deterministic function of (input, radius): dispatches to every applicable
/// obstruction pass and merges the verdicts.
ObstructionReport full_report(const ManifoldInput& input, int radius);

/// Stable JSON rendering: fixed key order, two-space indent, trailing
/// newline; byte-identical across runs.
std::string report_json(const ObstructionReport& r);

/// One line per chi value with its tagged reasons.
std::string report_text(const ObstructionReport& r);

}  // namespace hsob
