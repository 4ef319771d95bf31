#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "trif/curvelab/curve.hpp"
#include "trif/curvelab/envelope.hpp"
#include "trif/curvelab/parametrization.hpp"

namespace trif {

nlohmann::json to_json(const ImplicitCurve& c);
nlohmann::json to_json(const RationalParametrization& p);
nlohmann::json to_json(const EnvelopeOutput& e);

ImplicitCurve curve_from_json(const nlohmann::json& j);
RationalParametrization parametrization_from_json(const nlohmann::json& j);

// Reads a fixture file; the "kind" tag must match. Throws ParseError, or
// std::system_error when the file cannot be opened.
MultiPoly load_polynomial(const std::filesystem::path& path);
RationalParametrization load_parametrization(const std::filesystem::path& path);

}  // namespace trif
