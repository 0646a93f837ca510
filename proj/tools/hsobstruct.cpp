// Command-line front end: obstruction reports for embeddings of closed
// orientable 3-manifolds in the 4-sphere, plus the individual calculators.

#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "hsobstruct/csknot.hpp"
#include "hsobstruct/errors.hpp"
#include "hsobstruct/massey.hpp"
#include "hsobstruct/report.hpp"
#include "hsobstruct/torsion.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNonEmbeddable = 2;

int run_report(const std::string& path, int radius, const std::string& json_out) {
    hsob::ManifoldInput input = hsob::parse_manifold(hsob::read_file(path));
    hsob::ObstructionReport rep = hsob::full_report(input, radius);
    std::cout << hsob::report_text(rep);
    if (!json_out.empty()) {
        std::ofstream out(json_out, std::ios::binary);
        if (!out)
            throw hsob::Error("cannot write " + json_out);
        out << hsob::report_json(rep);
    }
    return rep.non_embeddable ? kExitNonEmbeddable : kExitOk;
}

int run_chi_set(std::size_t beta) {
    for (const hsob::ChiVerdict& v : hsob::lemma1_set(beta))
        std::cout << "chi(X) = " << v.chi_x << "  chi(Y) = " << v.chi_y()
                  << "  gamma = " << hsob::gamma_for_chi(beta, v.chi_x) << "\n";
    return kExitOk;
}

int run_split_search(const std::string& path, std::size_t gamma, int radius) {
    hsob::AlternatingForm3 f = hsob::parse_form(hsob::read_file(path));
    auto witness = hsob::find_splitting(f, gamma, radius);
    if (!witness) {
        std::cout << "inconclusive: no rank-" << gamma
                  << " splitting found within radius " << radius << "\n";
        return kExitOk;
    }
    auto print_basis = [](const char* name, const std::vector<hsob::IntVec>& b) {
        std::cout << name << ":\n";
        for (const hsob::IntVec& v : b) {
            std::cout << " ";
            for (const hsob::Int& x : v)
                std::cout << " " << hsob::to_string(x);
            std::cout << "\n";
        }
    };
    std::cout << "splitting found (both restrictions zero):\n";
    print_basis("a_basis", witness->a_basis);
    print_basis("b_basis", witness->b_basis);
    return kExitOk;
}

int run_seifert(const std::string& path) {
    hsob::SeifertData s = hsob::parse_seifert(hsob::read_file(path));
    hsob::ManifoldInput input;
    input.kind = hsob::ManifoldInput::Kind::Seifert;
    input.seifert = s;
    hsob::ObstructionReport rep = hsob::full_report(input, 3);
    std::cout << hsob::report_text(rep);
    return rep.non_embeddable ? kExitNonEmbeddable : kExitOk;
}

int run_linking(const std::string& path) {
    hsob::LinkingPairing p = hsob::parse_pairing(hsob::read_file(path));
    hsob::ManifoldInput input;
    input.kind = hsob::ManifoldInput::Kind::LinkingPairing;
    input.pairing = p;
    hsob::ObstructionReport rep = hsob::full_report(input, 3);
    std::cout << hsob::report_text(rep);
    return rep.non_embeddable ? kExitNonEmbeddable : kExitOk;
}

int run_cs_knot(long a, unsigned long c) {
    hsob::Int ai(a);
    bool intervals = hsob::verify_root_intervals(ai);
    hsob::Int order = hsob::quotient_order(ai, c);
    hsob::Int bound = hsob::order_bound(ai, c);
    std::cout << "root intervals verified: " << (intervals ? "yes" : "no") << "\n";
    std::cout << "quotient order c*|det(A^c - I)| = " << hsob::to_string(order)
              << "\n";
    std::cout << "bound c*a^(c-1) = " << hsob::to_string(bound) << "\n";
    std::cout << "order exceeds bound: " << (order > bound ? "yes" : "no")
              << "\n";
    return kExitOk;
}

int run_massey_verify(long e, unsigned long samples, unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coeff(-100, 100);
    auto random_element = [&]() {
        return hsob::NilElement{coeff(rng), coeff(rng), coeff(rng), e};
    };

    hsob::NilCochains c = hsob::cochains(e);
    auto d_phi_xi = hsob::coboundary1(c.phi_xi);
    auto d_phi_eta = hsob::coboundary1(c.phi_eta);
    auto d_theta = hsob::coboundary1(c.theta);
    auto [c1, c2] = hsob::triple_product_cocycles(e);

    bool all_ok = true;
    auto report = [&](const char* name, bool ok) {
        std::cout << name << ": " << (ok ? "PASS" : "FAIL") << "\n";
        all_ok = all_ok && ok;
    };

    bool id1 = true, id2 = true, id3 = true, coc1 = true, coc2 = true;
    for (unsigned long i = 0; i < samples; ++i) {
        hsob::NilElement g = random_element(), h = random_element(),
                         k = random_element();
        id1 = id1 && d_phi_xi(g, h) == c.xi(g) * c.xi(h);
        id2 = id2 && d_phi_eta(g, h) == c.eta(g) * c.eta(h);
        id3 = id3 && d_theta(g, h) == c.xi(g) * c.eta(h);
        coc1 = coc1 && hsob::cocycle_defect(c1, g, h, k) == 0;
        coc2 = coc2 && hsob::cocycle_defect(c2, g, h, k) == 0;
    }
    report("coboundary of phi_xi equals xi.xi", id1);
    report("coboundary of phi_eta equals eta.eta", id2);
    report("coboundary of theta equals xi.eta", id3);
    report("first triple-product cocycle identity", coc1);
    report("second triple-product cocycle identity", coc2);
    report("restriction independence", hsob::restriction_independence(e));
    return all_ok ? kExitOk : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"embedding obstructions for 3-manifolds in the 4-sphere"};
    app.require_subcommand(1);

    std::string input_path, json_out;
    int radius = 3;
    std::size_t beta = 0, gamma = 0;
    long cs_a = 6, massey_e = 1;
    unsigned long cs_c = 1, samples = 10000, seed = 1;

    CLI::App* report = app.add_subcommand("report", "full obstruction report");
    report->add_option("file", input_path, "manifold JSON")->required();
    report->add_option("--radius", radius, "search radius bound");
    report->add_option("--json", json_out, "also write the JSON report here");

    CLI::App* chi_set = app.add_subcommand("chi-set", "admissible chi(X) values");
    chi_set->add_option("--beta", beta, "first Betti number")->required();

    CLI::App* split = app.add_subcommand("split-search",
                                         "search for a direct splitting");
    split->add_option("file", input_path, "form JSON")->required();
    split->add_option("--gamma", gamma, "rank of the first factor")->required();
    split->add_option("--radius", radius, "search radius bound");

    CLI::App* seifert = app.add_subcommand("seifert", "Seifert input report");
    seifert->add_option("file", input_path, "Seifert JSON")->required();

    CLI::App* massey = app.add_subcommand("massey-verify",
                                          "verify the cochain identities");
    massey->add_option("--e", massey_e, "central extension parameter");
    massey->add_option("--samples", samples, "random samples per identity");
    massey->add_option("--seed", seed, "random seed");

    CLI::App* cs = app.add_subcommand("cs-knot", "twist-quotient orders");
    cs->add_option("--a", cs_a, "cubic parameter (a > 5)")->required();
    cs->add_option("--c", cs_c, "exponent c >= 1")->required();

    CLI::App* linking = app.add_subcommand("linking", "linking pairing report");
    linking->add_option("file", input_path, "pairing JSON")->required();

    try {
        app.parse(argc, argv);
        if (report->parsed())
            return run_report(input_path, radius, json_out);
        if (chi_set->parsed())
            return run_chi_set(beta);
        if (split->parsed())
            return run_split_search(input_path, gamma, radius);
        if (seifert->parsed())
            return run_seifert(input_path);
        if (massey->parsed())
            return run_massey_verify(massey_e, samples, seed);
        if (cs->parsed())
            return run_cs_knot(cs_a, cs_c);
        if (linking->parsed())
            return run_linking(input_path);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    } catch (const hsob::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
