#include "trif/curvelab/serialize.hpp"

#include <cerrno>
#include <fstream>
#include <system_error>

#include "trif/error.hpp"
#include "trif/polycore/poly_io.hpp"

namespace trif {
namespace {

nlohmann::json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::system_error(errno ? errno : ENOENT, std::generic_category(), path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(path.string() + ": " + ex.what());
  }
}

void expect_kind(const nlohmann::json& j, const char* kind) {
  if (j.contains("kind") && j["kind"] != kind) {
    throw ParseError(std::string("expected kind '") + kind + "', found " + j["kind"].dump());
  }
}

}  // namespace

nlohmann::json to_json(const ImplicitCurve& c) {
  return {{"kind", "implicit_curve"},
          {"poly", to_json(c.poly)},
          {"text", to_text(c.poly)},
          {"degree", c.degree},
          {"squarefree", c.squarefree}};
}

nlohmann::json to_json(const RationalParametrization& p) {
  return {{"kind", "rational_parametrization"},
          {"num_x", to_json(p.num_x)},
          {"num_y", to_json(p.num_y)},
          {"denom", to_json(p.denom)}};
}

nlohmann::json to_json(const EnvelopeOutput& e) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : e.factors_verified) {
    factors.push_back({{"text", to_text(f.curve.poly)}, {"degree", f.curve.degree}, {"multiplicity", f.multiplicity}});
  }
  return {{"kind", "envelope"},
          {"curve", to_json(e.curve)},
          {"raw_degree", e.raw_degree},
          {"factors_verified", factors},
          {"residual", to_text(e.residual)},
          {"residual_degree", std::max(e.residual.total_degree(), 0)},
          {"elimination", to_json(e.elimination)}};
}

ImplicitCurve curve_from_json(const nlohmann::json& j) {
  expect_kind(j, "implicit_curve");
  try {
    return ImplicitCurve::from_poly(poly_from_json(j.contains("poly") ? j.at("poly") : j));
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed curve JSON: ") + ex.what());
  }
}

RationalParametrization parametrization_from_json(const nlohmann::json& j) {
  expect_kind(j, "rational_parametrization");
  try {
    return RationalParametrization::make(poly_from_json(j.at("num_x")), poly_from_json(j.at("num_y")),
                                         poly_from_json(j.at("denom")));
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed parametrization JSON: ") + ex.what());
  }
}

MultiPoly load_polynomial(const std::filesystem::path& path) {
  const nlohmann::json j = read_file(path);
  expect_kind(j, "polynomial");
  return poly_from_json(j);
}

RationalParametrization load_parametrization(const std::filesystem::path& path) {
  return parametrization_from_json(read_file(path));
}

}  // namespace trif
