#include "hsobstruct/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "hsobstruct/errors.hpp"
#include "hsobstruct/torsion.hpp"

namespace hsob {

using ojson = nlohmann::ordered_json;

SeifertHomology homology_from_linking_matrix(const IntMatrix& m) {
    if (!m.is_symmetric())
        throw NotSymmetric("a linking matrix must be symmetric");
    SmithForm snf = smith_normal_form(m);
    SeifertHomology h;
    h.betti = m.cols() - snf.rank();
    for (const Int& d : snf.diagonal)
        if (d > 1)
            h.torsion.push_back(d);
    return h;
}

namespace {

ChiVerdict* find_row(std::vector<ChiVerdict>& table, long chi) {
    for (ChiVerdict& v : table)
        if (v.chi_x == chi)
            return &v;
    return nullptr;
}

void exclude_row(ChiVerdict& row, const std::string& reason) {
    row.status = ChiStatus::Excluded;
    row.reasons.push_back(reason);
}

void exclude_all(std::vector<ChiVerdict>& table, const std::string& reason) {
    for (ChiVerdict& row : table)
        exclude_row(row, reason);
}

void run_torsion_checks(ObstructionReport& rep,
                        const std::vector<Int>& factors) {
    rep.torsion.factors = factors;
    if (factors.empty())
        return;
    FiniteAbelian group(factors);
    bool dd = is_direct_double(group);
    rep.torsion.direct_double = dd;
    if (!dd) {
        rep.non_embeddable = true;
        rep.non_embeddable_reasons.push_back(
            "torsion-not-direct-double: the torsion subgroup must split as "
            "tau + tau across the two complementary regions");
    }
}

void report_for_seifert(ObstructionReport& rep, const SeifertData& input) {
    SeifertData s = normalized(input);
    SeifertHomology hom = homology(s);
    rep.beta = hom.betti;
    rep.epsilon = euler_invariant(s);
    rep.chi_table = lemma1_set(hom.betti);
    run_torsion_checks(rep, hom.torsion);

    SeifertObstruction obs = obstruct(s);
    for (const ChiExclusion& ex : obs.exclusions)
        if (ChiVerdict* row = find_row(rep.chi_table, ex.chi_x))
            exclude_row(*row, ex.reason);
    for (long chi : obs.fibre_image_notes)
        if (ChiVerdict* row = find_row(rep.chi_table, chi))
            row->reasons.push_back(
                "fibre-image-note: with this value the regular fibre has "
                "nonzero image in H1(Y;Q)");

    rep.smooth = smooth_obstructions(s);

    if (s.genus < 0) {
        bool pure_bundle = true;
        Int bundle_e = 0;
        for (const SeifertPair& p : s.pairs) {
            if (p.alpha == 1)
                bundle_e += p.beta;
            else
                pure_bundle = false;
        }
        if (pure_bundle) {
            NonorientableCheck nc =
                nonorientable_constraints(-s.genus, bundle_e);
            rep.nonorientable = nc;
            if (!nc.embeddable_normal_data) {
                rep.non_embeddable = true;
                rep.non_embeddable_reasons.push_back(
                    "normal-euler-violation: a circle bundle over a "
                    "nonorientable base embeds only with |e| <= 2c and "
                    "e == 2c mod 4");
            } else {
                for (ChiVerdict& row : rep.chi_table) {
                    bool realized =
                        std::find(nc.realizable_chi.begin(),
                                  nc.realizable_chi.end(),
                                  row.chi_x) != nc.realizable_chi.end();
                    if (realized) {
                        row.reasons.push_back(
                            "construction-realized: produced by the standard "
                            "block construction");
                    } else if (row.status == ChiStatus::Allowed) {
                        row.status = ChiStatus::Inconclusive;
                        row.reasons.push_back(
                            "construction-unknown: not produced by the "
                            "standard construction and not excluded");
                    }
                }
            }
        }
    }

    if (rep.non_embeddable)
        exclude_all(rep.chi_table, rep.non_embeddable_reasons.back());
    rep.abelian_pi1 = abelian_feasibility(hom.betti);
}

void report_for_form(ObstructionReport& rep, const AlternatingForm3& f,
                     int radius) {
    const std::size_t beta = f.beta();
    rep.beta = beta;
    rep.chi_table = lemma1_set(beta);
    rep.cup_kernel = cup_kernel_rank(f);

    if (is_zero(f)) {
        for (ChiVerdict& row : rep.chi_table)
            row.reasons.push_back(
                "form-zero: the cup 3-form vanishes, so no splitting "
                "obstruction applies");
    } else {
        for (ChiVerdict& row : rep.chi_table) {
            const std::size_t gamma =
                static_cast<std::size_t>(gamma_for_chi(beta, row.chi_x));
            if (gamma == beta) {
                exclude_row(row,
                            "cup-form-nonzero: a nonzero cup 3-form forbids a "
                            "complementary region of full rank");
                continue;
            }
            if (gamma + 1 == beta && is_counterexample_form_beta6(f)) {
                exclude_row(row,
                            "kernel-summand-obstruction: every corank-1 "
                            "summand carries a rank-3 sublattice with nonzero "
                            "form value");
                continue;
            }
            std::optional<SplitWitness> w = find_splitting(f, gamma, radius);
            if (w) {
                row.reasons.push_back(
                    "splitting-witness: direct splitting with both "
                    "restrictions zero found at radius " +
                    std::to_string(radius));
                rep.split_witnesses.emplace(row.chi_x, std::move(*w));
            } else {
                row.status = ChiStatus::Inconclusive;
                row.reasons.push_back(
                    "splitting-search-exhausted: no splitting found within "
                    "radius " +
                    std::to_string(radius) + " (bounded search)");
            }
        }
    }
    rep.abelian_pi1 = abelian_feasibility(beta);
}

void report_for_matrix(ObstructionReport& rep, const IntMatrix& m) {
    SeifertHomology hom = homology_from_linking_matrix(m);
    rep.beta = hom.betti;
    rep.chi_table = lemma1_set(hom.betti);
    run_torsion_checks(rep, hom.torsion);
    if (rep.non_embeddable)
        exclude_all(rep.chi_table, rep.non_embeddable_reasons.back());
    rep.abelian_pi1 = abelian_feasibility(hom.betti);
}

void report_for_pairing(ObstructionReport& rep, const LinkingPairing& p) {
    for (const Int& d : p.group.invariant_factors())
        rep.torsion.factors.push_back(d);
    bool dd = is_direct_double(p.group);
    rep.torsion.direct_double = dd;
    if (!dd) {
        rep.non_embeddable = true;
        rep.non_embeddable_reasons.push_back(
            "torsion-not-direct-double: the torsion subgroup must split as "
            "tau + tau across the two complementary regions");
    }
    try {
        auto witness = is_hyperbolic(p);
        rep.torsion.hyperbolic = witness.has_value();
        if (!witness) {
            rep.non_embeddable = true;
            rep.non_embeddable_reasons.push_back(
                "linking-not-hyperbolic: the linking pairing admits no "
                "self-annihilating summand dual to a complement");
        }
    } catch (const TooLarge&) {
        rep.torsion.notes.push_back(
            "hyperbolicity undecided: group order exceeds the search bound");
    }
}

// --- rendering ---------------------------------------------------------

ojson json_int(const Int& x) {
    if (x.fits_slong_p())
        return ojson(x.get_si());
    return ojson(x.get_str());
}

ojson json_vec(const IntVec& v) {
    ojson a = ojson::array();
    for (const Int& x : v)
        a.push_back(json_int(x));
    return a;
}

ojson json_basis(const std::vector<IntVec>& basis) {
    ojson a = ojson::array();
    for (const IntVec& v : basis)
        a.push_back(json_vec(v));
    return a;
}

ojson echo_input(const ManifoldInput& in) {
    ojson j;
    j["kind"] = kind_name(in.kind);
    switch (in.kind) {
        case ManifoldInput::Kind::Seifert: {
            j["genus"] = in.seifert->genus;
            ojson pairs = ojson::array();
            for (const SeifertPair& p : in.seifert->pairs)
                pairs.push_back(ojson::array({json_int(p.alpha), json_int(p.beta)}));
            j["pairs"] = pairs;
            break;
        }
        case ManifoldInput::Kind::Form: {
            j["beta"] = in.form->beta();
            ojson monos = ojson::array();
            for (const auto& [key, c] : in.form->monomials())
                monos.push_back(ojson::array(
                    {key[0], key[1], key[2], json_int(c)}));
            j["monomials"] = monos;
            break;
        }
        case ManifoldInput::Kind::LinkingMatrix: {
            ojson rows = ojson::array();
            for (std::size_t i = 0; i < in.linking_matrix->rows(); ++i)
                rows.push_back(json_vec(in.linking_matrix->row(i)));
            j["matrix"] = rows;
            break;
        }
        case ManifoldInput::Kind::LinkingPairing: {
            ojson factors = ojson::array();
            for (const Int& d : in.pairing->group.invariant_factors())
                factors.push_back(json_int(d));
            j["factors"] = factors;
            ojson gram = ojson::array();
            for (const auto& row : in.pairing->gram) {
                ojson r = ojson::array();
                for (const Rat& v : row)
                    r.push_back(to_string(v));
                gram.push_back(r);
            }
            j["gram"] = gram;
            break;
        }
    }
    return j;
}

}  // namespace

ObstructionReport full_report(const ManifoldInput& input, int radius) {
    if (radius < 1)
        throw BadParameter("radius must be at least 1");
    ObstructionReport rep;
    rep.input = input;
    rep.radius = radius;
    switch (input.kind) {
        case ManifoldInput::Kind::Seifert:
            rep.input.seifert = normalized(*input.seifert);
            report_for_seifert(rep, *input.seifert);
            break;
        case ManifoldInput::Kind::Form:
            report_for_form(rep, *input.form, radius);
            break;
        case ManifoldInput::Kind::LinkingMatrix:
            report_for_matrix(rep, *input.linking_matrix);
            break;
        case ManifoldInput::Kind::LinkingPairing:
            report_for_pairing(rep, *input.pairing);
            break;
    }
    return rep;
}

std::string report_json(const ObstructionReport& r) {
    ojson j;
    j["tool"] = {{"name", "hsobstruct"},
                 {"version", kToolVersion},
                 {"radius", r.radius}};
    j["input"] = echo_input(r.input);
    if (r.beta)
        j["beta"] = *r.beta;
    else
        j["beta"] = nullptr;
    if (r.epsilon)
        j["epsilon"] = to_string(*r.epsilon);
    if (r.cup_kernel)
        j["cup_kernel_rank"] = *r.cup_kernel;

    ojson torsion;
    ojson factors = ojson::array();
    for (const Int& d : r.torsion.factors)
        factors.push_back(json_int(d));
    torsion["factors"] = factors;
    torsion["direct_double"] =
        r.torsion.direct_double ? ojson(*r.torsion.direct_double) : ojson(nullptr);
    torsion["hyperbolic"] =
        r.torsion.hyperbolic ? ojson(*r.torsion.hyperbolic) : ojson(nullptr);
    torsion["notes"] = r.torsion.notes;
    j["torsion"] = torsion;

    j["non_embeddable"] = r.non_embeddable;
    j["non_embeddable_reasons"] = r.non_embeddable_reasons;

    ojson table = ojson::array();
    for (const ChiVerdict& v : r.chi_table) {
        ojson row;
        row["chi_x"] = v.chi_x;
        row["chi_y"] = v.chi_y();
        if (r.beta)
            row["gamma"] = gamma_for_chi(*r.beta, v.chi_x);
        row["status"] = to_string(v.status);
        row["reasons"] = v.reasons;
        auto w = r.split_witnesses.find(v.chi_x);
        if (w != r.split_witnesses.end())
            row["witness"] = {{"a_basis", json_basis(w->second.a_basis)},
                              {"b_basis", json_basis(w->second.b_basis)}};
        table.push_back(row);
    }
    j["chi_table"] = table;

    if (r.smooth) {
        j["smooth"] = {{"skew_symmetric", r.smooth->skew_symmetric},
                       {"weakly_skew_symmetric", r.smooth->weakly_skew_symmetric},
                       {"even_cone_condition", r.smooth->even_cone_condition},
                       {"conclusions", r.smooth->conclusions}};
    }
    if (r.nonorientable) {
        j["nonorientable"] = {
            {"embeddable_normal_data", r.nonorientable->embeddable_normal_data},
            {"realizable_chi", r.nonorientable->realizable_chi}};
    }

    ojson abelian = ojson::array();
    for (const AbelianCandidate& c : r.abelian_pi1)
        abelian.push_back({{"label", c.label},
                           {"rank", c.rank},
                           {"cyclic_torsion_parameter", c.cyclic_torsion_parameter},
                           {"constraint", c.constraint}});
    j["abelian_pi1"] = abelian;

    return j.dump(2) + "\n";
}

std::string report_text(const ObstructionReport& r) {
    std::ostringstream out;
    out << "hsobstruct obstruction report (radius " << r.radius << ")\n";
    out << "input: " << kind_name(r.input.kind) << "\n";
    if (r.beta)
        out << "beta: " << *r.beta << "\n";
    if (r.epsilon)
        out << "euler invariant: " << to_string(*r.epsilon) << "\n";
    if (r.cup_kernel)
        out << "cup kernel rank: " << *r.cup_kernel << "\n";

    if (!r.torsion.factors.empty() || r.torsion.direct_double) {
        out << "torsion factors:";
        for (const Int& d : r.torsion.factors)
            out << " " << to_string(d);
        if (r.torsion.factors.empty())
            out << " none";
        out << "\n";
        if (r.torsion.direct_double)
            out << "direct double: " << (*r.torsion.direct_double ? "yes" : "no")
                << "\n";
        if (r.torsion.hyperbolic)
            out << "hyperbolic linking pairing: "
                << (*r.torsion.hyperbolic ? "yes" : "no") << "\n";
        for (const std::string& n : r.torsion.notes)
            out << "note: " << n << "\n";
    }

    if (!r.chi_table.empty()) {
        out << "chi(X) table:\n";
        for (const ChiVerdict& v : r.chi_table) {
            out << "  chi(X) = " << v.chi_x << "  chi(Y) = " << v.chi_y()
                << "  " << to_string(v.status);
            for (const std::string& reason : v.reasons)
                out << "\n      [" << reason << "]";
            out << "\n";
        }
    }

    if (r.smooth) {
        out << "smooth predicates: skew_symmetric="
            << (r.smooth->skew_symmetric ? "yes" : "no")
            << " weakly_skew_symmetric="
            << (r.smooth->weakly_skew_symmetric ? "yes" : "no")
            << " even_cone_condition="
            << (r.smooth->even_cone_condition ? "yes" : "no") << "\n";
        for (const std::string& c : r.smooth->conclusions)
            out << "  " << c << "\n";
    }
    if (r.nonorientable) {
        out << "nonorientable normal data admissible: "
            << (r.nonorientable->embeddable_normal_data ? "yes" : "no") << "\n";
        if (!r.nonorientable->realizable_chi.empty()) {
            out << "construction-realized chi(X):";
            for (long c : r.nonorientable->realizable_chi)
                out << " " << c;
            out << "\n";
        }
    }
    if (!r.abelian_pi1.empty()) {
        out << "abelian pi1(X) candidates:";
        for (const AbelianCandidate& c : r.abelian_pi1)
            out << " " << c.label;
        out << "\n";
    }
    if (r.non_embeddable) {
        out << "verdict: does not embed\n";
        for (const std::string& reason : r.non_embeddable_reasons)
            out << "  [" << reason << "]\n";
    } else {
        out << "verdict: not excluded by the implemented obstructions\n";
    }
    return out.str();
}

}  // namespace hsob
