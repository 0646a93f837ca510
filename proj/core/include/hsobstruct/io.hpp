#pragma once

#include <optional>
#include <string>

#include "hsobstruct/forms.hpp"
#include "hsobstruct/seifert.hpp"
#include "hsobstruct/torsion.hpp"
#include "hsobstruct/zlinalg.hpp"

namespace hsob {

/// Tagged manifold description, one payload per kind.
struct ManifoldInput {
    enum class Kind { Seifert, Form, LinkingMatrix, LinkingPairing };
    Kind kind;
    std::optional<SeifertData> seifert;
    std::optional<AlternatingForm3> form;
    std::optional<IntMatrix> linking_matrix;
    std::optional<LinkingPairing> pairing;
};

const char* kind_name(ManifoldInput::Kind k);

/// Parsers take JSON text and validate the schema; all throw ParseError on
/// malformed input. The kind tag is "seifert", "form", "linking_matrix" or
/// "linking". Subcommand parsers accept the bare payload without the tag.
ManifoldInput parse_manifold(const std::string& json_text);
AlternatingForm3 parse_form(const std::string& json_text);
SeifertData parse_seifert(const std::string& json_text);
LinkingPairing parse_pairing(const std::string& json_text);
IntMatrix parse_linking_matrix(const std::string& json_text);

Rat parse_rational(const std::string& text);  // "p/q" or "p"

std::string read_file(const std::string& path);

}  // namespace hsob
