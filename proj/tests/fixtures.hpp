#pragma once

#include <string>

#include "trif/curvelab/curve.hpp"
#include "trif/curvelab/serialize.hpp"
#include "trif/polycore/poly_io.hpp"

namespace trif::test {

inline std::filesystem::path fixture_path(const std::string& name) {
  return std::filesystem::path(TRIF_FIXTURE_DIR) / name;
}

// Fixture polynomial over {x, y}.
inline MultiPoly plane_fixture(const std::string& name) {
  return load_polynomial(fixture_path(name)).with_variables(plane_variables());
}

inline RationalParametrization param_fixture(const std::string& name) {
  return load_parametrization(fixture_path(name));
}

inline MultiPoly xy(const char* text) { return parse_poly(text, plane_variables()); }

}  // namespace trif::test
