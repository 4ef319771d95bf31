#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "trif/polycore/multipoly.hpp"

namespace trif {

// Grammar:
//   poly    := ['+'|'-'] term (('+'|'-') term)*
//   term    := power ('*' power)*      ('*' is optional after an integer)
//   power   := primary ['^' integer]
//   primary := integer | var | '(' poly ')'
// Whitespace is insignificant; variables are lowercase identifiers.
std::string to_text(const MultiPoly& p);

// Every variable in `text` must belong to `vars`.
MultiPoly parse_poly(std::string_view text, const Variables& vars);
// Infers the variable list: x, y, z, t, a, b first (in that order), then any
// other names alphabetically.
MultiPoly parse_poly(std::string_view text);

// {"vars":[...],"terms":[{"e":[...],"c":"<decimal>"},...]}
nlohmann::json to_json(const MultiPoly& p);
MultiPoly poly_from_json(const nlohmann::json& j);

}  // namespace trif
