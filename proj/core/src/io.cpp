#include "hsobstruct/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hsobstruct/errors.hpp"

namespace hsob {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw ParseError("invalid JSON");
    return j;
}

Int int_from(const json& j, const char* what) {
    if (j.is_number_integer())
        return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string())
        return Int(j.get<std::string>());
    throw ParseError(std::string("expected an integer for ") + what);
}

AlternatingForm3 form_from(const json& j) {
    if (!j.contains("beta") || !j["beta"].is_number_unsigned())
        throw ParseError("form descriptor needs a non-negative \"beta\"");
    AlternatingForm3 f(j["beta"].get<std::size_t>());
    if (j.contains("monomials")) {
        if (!j["monomials"].is_array())
            throw ParseError("\"monomials\" must be an array");
        for (const json& mono : j["monomials"]) {
            if (!mono.is_array() || mono.size() != 4)
                throw ParseError("each monomial is [i, j, k, coefficient]");
            f.add_monomial(mono[0].get<int>(), mono[1].get<int>(),
                           mono[2].get<int>(), int_from(mono[3], "coefficient"));
        }
    }
    return f;
}

SeifertData seifert_from(const json& j) {
    if (!j.contains("genus") || !j["genus"].is_number_integer())
        throw ParseError("seifert descriptor needs an integer \"genus\"");
    SeifertData s;
    s.genus = j["genus"].get<long>();
    if (j.contains("pairs")) {
        if (!j["pairs"].is_array())
            throw ParseError("\"pairs\" must be an array");
        for (const json& p : j["pairs"]) {
            if (!p.is_array() || p.size() != 2)
                throw ParseError("each Seifert pair is [alpha, beta]");
            s.pairs.push_back(SeifertPair{int_from(p[0], "alpha"),
                                          int_from(p[1], "beta")});
        }
    }
    validate(s);
    return s;
}

LinkingPairing pairing_from(const json& j) {
    if (!j.contains("factors") || !j["factors"].is_array())
        throw ParseError("pairing descriptor needs \"factors\"");
    std::vector<Int> factors;
    for (const json& f : j["factors"])
        factors.push_back(int_from(f, "invariant factor"));
    LinkingPairing p;
    p.group = FiniteAbelian(std::move(factors));
    if (!j.contains("gram") || !j["gram"].is_array())
        throw ParseError("pairing descriptor needs \"gram\"");
    for (const json& row : j["gram"]) {
        std::vector<Rat> r;
        for (const json& entry : row) {
            if (!entry.is_string())
                throw ParseError("gram entries are rationals written as strings");
            r.push_back(parse_rational(entry.get<std::string>()));
        }
        p.gram.push_back(std::move(r));
    }
    validate(p);
    return p;
}

IntMatrix matrix_from(const json& j) {
    if (!j.contains("matrix") || !j["matrix"].is_array())
        throw ParseError("linking_matrix descriptor needs \"matrix\"");
    std::vector<IntVec> rows;
    std::size_t cols = 0;
    for (const json& row : j["matrix"]) {
        if (!row.is_array())
            throw ParseError("matrix rows must be arrays");
        IntVec r;
        for (const json& entry : row)
            r.push_back(int_from(entry, "matrix entry"));
        if (rows.empty())
            cols = r.size();
        else if (r.size() != cols)
            throw ParseError("matrix rows must have equal length");
        rows.push_back(std::move(r));
    }
    return IntMatrix::from_rows(rows, cols);
}

}  // namespace

const char* kind_name(ManifoldInput::Kind k) {
    switch (k) {
        case ManifoldInput::Kind::Seifert: return "seifert";
        case ManifoldInput::Kind::Form: return "form";
        case ManifoldInput::Kind::LinkingMatrix: return "linking_matrix";
        case ManifoldInput::Kind::LinkingPairing: return "linking";
    }
    return "?";
}

ManifoldInput parse_manifold(const std::string& json_text) {
    json j = parse_json(json_text);
    if (!j.contains("kind") || !j["kind"].is_string())
        throw ParseError("manifold input needs a \"kind\" tag");
    const std::string kind = j["kind"].get<std::string>();
    ManifoldInput in;
    if (kind == "seifert") {
        in.kind = ManifoldInput::Kind::Seifert;
        in.seifert = seifert_from(j);
    } else if (kind == "form") {
        in.kind = ManifoldInput::Kind::Form;
        in.form = form_from(j);
    } else if (kind == "linking_matrix") {
        in.kind = ManifoldInput::Kind::LinkingMatrix;
        in.linking_matrix = matrix_from(j);
    } else if (kind == "linking" || kind == "linking_pairing") {
        in.kind = ManifoldInput::Kind::LinkingPairing;
        in.pairing = pairing_from(j);
    } else {
        throw ParseError("unknown input kind: " + kind);
    }
    return in;
}

AlternatingForm3 parse_form(const std::string& json_text) {
    return form_from(parse_json(json_text));
}

SeifertData parse_seifert(const std::string& json_text) {
    return seifert_from(parse_json(json_text));
}

LinkingPairing parse_pairing(const std::string& json_text) {
    return pairing_from(parse_json(json_text));
}

IntMatrix parse_linking_matrix(const std::string& json_text) {
    return matrix_from(parse_json(json_text));
}

Rat parse_rational(const std::string& text) {
    if (text.empty())
        throw ParseError("empty rational");
    try {
        Rat r(text);
        r.canonicalize();
        if (r.get_den() <= 0)
            throw ParseError("rational with nonpositive denominator: " + text);
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational: " + text);
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace hsob
