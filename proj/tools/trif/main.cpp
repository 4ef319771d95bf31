#include <CLI11.hpp>

#include <cerrno>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include "acceptance.hpp"
#include "trif/curvelab/envelope.hpp"
#include "trif/curvelab/serialize.hpp"
#include "trif/error.hpp"
#include "trif/polycore/poly_io.hpp"
#include "trif/render/render.hpp"

#ifndef TRIF_FIXTURE_DIR
#define TRIF_FIXTURE_DIR "fixtures"
#endif

namespace {

using namespace trif;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitResource = 2;
constexpr int kExitUsage = 64;
constexpr int kExitNoInput = 66;

// A flag value that parsed but is unusable.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { text, json, svg };

struct Flags {
  std::string a = "1";
  std::string radius = "1";
  std::string method;
  std::string format = "text";
  std::string base;
  std::string param_file;
  std::string output;
  std::string csv;
  bool filter = false;
  int circles = 0;
  std::optional<std::size_t> max_terms;
  std::optional<std::size_t> max_pairs;
  // viewport
  double x_min = -2.5, x_max = 2.5, y_min = -2.5, y_max = 2.5;
  int resolution = 256;
  // verify
  std::vector<std::string> only;
  std::string fixtures = TRIF_FIXTURE_DIR;
  bool skip_stretch = false;
};

struct RunConfig {
  std::string subcommand;
  Rational a;
  Rational radius;
  std::string method;
  Format format = Format::text;
  Viewport viewport;
  GroebnerOptions budgets;
  const Flags* flags = nullptr;
};

Rational parse_rational_flag(const std::string& name, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const ParseError&) {
    throw UsageError("--" + name + " expects an integer or p/q, got '" + text + "'");
  } catch (const DomainError&) {
    throw UsageError("--" + name + " has a zero denominator");
  }
}

RunConfig make_config(const std::string& sub, const Flags& f) {
  RunConfig c;
  c.subcommand = sub;
  c.flags = &f;
  c.a = parse_rational_flag("a", f.a);
  c.radius = parse_rational_flag("radius", f.radius);
  if (c.a.sign() <= 0) throw DomainError("trifolium parameter a must be positive");
  if (c.radius.sign() <= 0) throw DomainError("radius must be positive");
  c.method = f.method;
  if (f.format == "text") {
    c.format = Format::text;
  } else if (f.format == "json") {
    c.format = Format::json;
  } else if (f.format == "svg") {
    c.format = Format::svg;
  } else {
    throw UsageError("--format must be text, json or svg");
  }
  c.viewport.x_min = f.x_min;
  c.viewport.x_max = f.x_max;
  c.viewport.y_min = f.y_min;
  c.viewport.y_max = f.y_max;
  c.viewport.grid_resolution = f.resolution;
  c.budgets = groebner_options_from_env();
  if (f.max_terms) c.budgets.max_terms = *f.max_terms;
  if (f.max_pairs) c.budgets.max_pairs = *f.max_pairs;
  return c;
}

void write_output(const RunConfig& c, const std::string& content) {
  if (c.flags->output.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(c.flags->output, std::ios::binary);
  if (!out) throw std::system_error(errno ? errno : EACCES, std::generic_category(), "cannot write " + c.flags->output);
  out << content;
}

std::string svg_of(const std::vector<CurveMesh>& meshes, const Viewport& vp) {
  std::ostringstream out;
  emit_svg(meshes, vp, out);
  return out.str();
}

CurveMesh mesh_of(const ImplicitCurve& curve, const Viewport& vp, const std::string& source) {
  CurveMesh m = marching_squares(curve, vp);
  m.source = source;
  return m;
}

std::string param_text(const RationalParametrization& p) {
  return "x(t) = (" + to_text(p.num_x) + ") / (" + to_text(p.denom) + ")\n" + "y(t) = (" + to_text(p.num_y) +
         ") / (" + to_text(p.denom) + ")\n";
}

std::pair<Rational, Rational> parse_base(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--base expects 'x,y'");
  return {parse_rational_flag("base", text.substr(0, comma)), parse_rational_flag("base", text.substr(comma + 1))};
}

RationalParametrization trifolium_param(const RunConfig& c) {
  const ImplicitCurve curve = make_trifolium(c.a);
  std::optional<std::pair<Rational, Rational>> base;
  if (!c.flags->base.empty()) {
    base = parse_base(c.flags->base);
  } else {
    base = find_pencil_base(curve);
  }
  if (!base) throw DomainError("no base point of multiplicity deg-1 found");
  return parametrize_line_pencil(curve, *base);
}

RationalParametrization centers_of(const RunConfig& c) {
  if (!c.flags->param_file.empty()) return load_parametrization(c.flags->param_file);
  return trifolium_param(c);
}

std::string envelope_text(const EnvelopeOutput& out, const char* residual_label) {
  std::string s;
  for (const auto& f : out.factors_verified) {
    s += "circle: " + to_text(f.curve.poly);
    if (f.multiplicity > 1) s += " (multiplicity " + std::to_string(f.multiplicity) + ")";
    s += "\n";
  }
  s += std::string(residual_label) + ": " + to_text(out.residual) + "\n";
  return s;
}

int cmd_trifolium(const RunConfig& c) {
  const ImplicitCurve curve = make_trifolium(c.a);
  switch (c.format) {
    case Format::text:
      write_output(c, to_text(curve.poly) + "\n");
      break;
    case Format::json:
      write_output(c, to_json(curve).dump(2) + "\n");
      break;
    case Format::svg:
      write_output(c, svg_of({mesh_of(curve, c.viewport, "trifolium")}, c.viewport));
      break;
  }
  return kExitOk;
}

int cmd_parametrize(const RunConfig& c) {
  const RationalParametrization p = trifolium_param(c);
  if (c.format == Format::svg) {
    CurveMesh m = sample_parametric(p, {-40, 40}, 2000, c.viewport);
    m.source = "parametrization";
    write_output(c, svg_of({m}, c.viewport));
  } else {
    write_output(c, c.format == Format::json ? to_json(p).dump(2) + "\n" : param_text(p));
  }
  return kExitOk;
}

int cmd_implicitize(const RunConfig& c) {
  const ImplicitCurve curve = implicitize(centers_of(c));
  switch (c.format) {
    case Format::text:
      write_output(c, to_text(curve.poly) + "\n");
      break;
    case Format::json:
      write_output(c, to_json(curve).dump(2) + "\n");
      break;
    case Format::svg:
      write_output(c, svg_of({mesh_of(curve, c.viewport, "implicit")}, c.viewport));
      break;
  }
  return kExitOk;
}

EnvelopeOptions envelope_options(const RunConfig& c, const std::string& method) {
  EnvelopeOptions o;
  o.groebner = c.budgets;
  o.filter_spurious = c.flags->filter;
  if (method.empty() || method == "resultant") {
    o.method = EliminationMethod::resultant;
  } else if (method == "groebner") {
    o.method = EliminationMethod::groebner;
  } else {
    throw UsageError("--method must be resultant or groebner");
  }
  return o;
}

void emit_envelope(const RunConfig& c, const EnvelopeOutput& out, const char* residual_label) {
  switch (c.format) {
    case Format::text:
      write_output(c, envelope_text(out, residual_label));
      break;
    case Format::json:
      write_output(c, to_json(out).dump(2) + "\n");
      break;
    case Format::svg: {
      std::vector<CurveMesh> layers;
      if (c.subcommand == "offset") layers.push_back(mesh_of(make_trifolium(c.a), c.viewport, "trifolium"));
      layers.push_back(mesh_of(out.curve, c.viewport, "envelope"));
      write_output(c, svg_of(layers, c.viewport));
      break;
    }
  }
}

int cmd_envelope(const RunConfig& c) {
  const EnvelopeOutput out = envelope_eliminate(CircleFamily(centers_of(c), c.radius), envelope_options(c, c.method));
  emit_envelope(c, out, "envelope");
  return kExitOk;
}

int cmd_offset(const RunConfig& c) {
  const ImplicitCurve curve = make_trifolium(c.a);
  EnvelopeOutput out;
  if (c.method.empty() || c.method == "parametric") {
    out = offset_parametric_route(curve, c.radius, envelope_options(c, "resultant"));
  } else if (c.method == "implicit") {
    out = offset_implicit_route(curve, c.radius, c.budgets);
  } else {
    throw UsageError("--method must be parametric or implicit");
  }
  emit_envelope(c, out, "offset");
  return kExitOk;
}

int cmd_plot(const RunConfig& c) {
  const ImplicitCurve curve = make_trifolium(c.a);
  std::vector<CurveMesh> layers{mesh_of(curve, c.viewport, "trifolium")};
  const RationalParametrization centers = trifolium_param(c);
  if (c.flags->circles > 0) {
    // Snapshots on a uniform grid of the line-pencil parameter.
    const int n = c.flags->circles;
    CurveMesh swarm;
    swarm.source = "circles";
    for (int k = 0; k < n; ++k) {
      const double t = n == 1 ? 0.0 : -4.0 + 8.0 * k / (n - 1);
      try {
        const auto [cx, cy] = centers.at(t);
        const CurveMesh m = sample_circle(cx, cy, c.radius.to_double());
        swarm.segments.insert(swarm.segments.end(), m.segments.begin(), m.segments.end());
      } catch (const DomainError&) {
      }
    }
    layers.push_back(std::move(swarm));
  }
  if (c.method != "none") {
    EnvelopeOutput out = offset_parametric_route(curve, c.radius, envelope_options(c, "resultant"));
    layers.push_back(mesh_of(ImplicitCurve::from_poly(out.residual), c.viewport, "offset"));
  }
  if (!c.flags->csv.empty()) {
    std::ofstream csv(c.flags->csv, std::ios::binary);
    if (!csv) throw std::system_error(errno ? errno : EACCES, std::generic_category(), "cannot write " + c.flags->csv);
    for (const auto& m : layers) write_csv(m, csv);
  }
  write_output(c, svg_of(layers, c.viewport));
  return kExitOk;
}

int cmd_verify(const Flags& f) {
  acceptance::Options options;
  options.fixtures = f.fixtures;
  options.stretch = !f.skip_stretch;
  for (const auto& id : f.only) {
    if (!acceptance::is_check_id(id)) throw UsageError("unknown check '" + id + "'");
  }
  for (const auto& w : acceptance::check_fixtures(options.fixtures)) std::cerr << "warning: " << w << "\n";
  const std::vector<std::string> ids = f.only.empty() ? acceptance::check_ids() : f.only;
  bool all = true;
  for (const auto& id : ids) {
    const auto r = acceptance::run_check(id, options);
    std::cout << acceptance::format_line(r) << std::endl;
    all = all && r.passed;
  }
  return all ? kExitOk : kExitDomain;
}

void add_rational_flags(CLI::App* app, Flags& f, bool radius) {
  app->add_option("--a", f.a, "trifolium parameter a > 0 (integer or p/q)")->capture_default_str();
  if (radius) app->add_option("--radius", f.radius, "circle radius r > 0 (integer or p/q)")->capture_default_str();
}

void add_output_flags(CLI::App* app, Flags& f) {
  app->add_option("--format", f.format, "text, json or svg")->capture_default_str();
  app->add_option("-o,--output", f.output, "write to a file instead of stdout");
  app->add_option("--xmin", f.x_min, "viewport")->capture_default_str();
  app->add_option("--xmax", f.x_max, "viewport")->capture_default_str();
  app->add_option("--ymin", f.y_min, "viewport")->capture_default_str();
  app->add_option("--ymax", f.y_max, "viewport")->capture_default_str();
  app->add_option("--resolution", f.resolution, "grid cells per side (>= 16)")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trifolium offsets: implicitization, envelopes and plots"};
  app.require_subcommand(1);
  Flags f;
  app.add_option("--max-terms", f.max_terms, "Groebner term budget (overrides TRIF_MAX_TERMS)");
  app.add_option("--max-pairs", f.max_pairs, "Groebner pair budget (overrides TRIF_MAX_PAIRS)");

  auto* trifolium = app.add_subcommand("trifolium", "print the trifolium (x^2+y^2)^2 = a*x*(x^2-3y^2)");
  add_rational_flags(trifolium, f, false);
  add_output_flags(trifolium, f);

  auto* parametrize = app.add_subcommand("parametrize", "line-pencil parametrization of the trifolium");
  add_rational_flags(parametrize, f, false);
  add_output_flags(parametrize, f);
  parametrize->add_option("--base", f.base, "base point 'x,y' (default: searched)");

  auto* implicitize_cmd = app.add_subcommand("implicitize", "implicit equation of a rational parametrization");
  add_rational_flags(implicitize_cmd, f, false);
  add_output_flags(implicitize_cmd, f);
  implicitize_cmd->add_option("--param", f.param_file, "parametrization JSON (default: trifolium line pencil)");

  auto* envelope = app.add_subcommand("envelope", "envelope of circles centred on a parametrized curve");
  add_rational_flags(envelope, f, true);
  add_output_flags(envelope, f);
  envelope->add_option("--param", f.param_file, "centre parametrization JSON (default: trifolium line pencil)");
  envelope->add_option("--method", f.method, "resultant or groebner");
  envelope->add_flag("--filter", f.filter, "drop factors no oracle sample lies on");

  auto* offset = app.add_subcommand("offset", "offset of the trifolium");
  add_rational_flags(offset, f, true);
  add_output_flags(offset, f);
  offset->add_option("--method", f.method, "parametric or implicit");

  auto* plot = app.add_subcommand("plot", "SVG of the trifolium, its offset and circle snapshots");
  add_rational_flags(plot, f, true);
  add_output_flags(plot, f);
  plot->add_option("--circles", f.circles, "number of circle snapshots")->capture_default_str();
  plot->add_option("--offset", f.method, "'none' to skip the offset layer");
  plot->add_option("--csv", f.csv, "also dump all mesh segments as CSV");

  auto* verify = app.add_subcommand("verify", "run the acceptance checks against the fixtures");
  verify->add_option("--only", f.only, "run only these checks (A1..A10)");
  verify->add_option("--fixtures", f.fixtures, "fixture directory")->capture_default_str();
  verify->add_flag("--skip-stretch", f.skip_stretch, "skip the trifolium implicit-route stretch check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::string sub = app.get_subcommands().front()->get_name();
  try {
    if (sub == "verify") return cmd_verify(f);
    const RunConfig c = make_config(sub, f);
    if (sub == "trifolium") return cmd_trifolium(c);
    if (sub == "parametrize") return cmd_parametrize(c);
    if (sub == "implicitize") return cmd_implicitize(c);
    if (sub == "envelope") return cmd_envelope(c);
    if (sub == "offset") return cmd_offset(c);
    return cmd_plot(c);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.get_subcommands().front()->help();
    return kExitUsage;
  } catch (const acceptance::FixtureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoInput;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const ParseError& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::system_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == std::errc::no_such_file_or_directory ? kExitNoInput : kExitDomain;
  }
}
