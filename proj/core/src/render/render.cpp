#include "trif/render/render.hpp"

#include <algorithm>
#include <array>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>
#include <system_error>
#include <thread>

namespace trif {

double Viewport::diagonal() const { return std::hypot(x_max - x_min, y_max - y_min); }

double Viewport::cell_diagonal() const { return diagonal() / grid_resolution; }

LayerStyle Viewport::style(std::size_t layer) const {
  if (!styles.empty()) return styles[layer % styles.size()];
  static const std::array<const char*, 6> palette{"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};
  LayerStyle s;
  s.stroke = palette[layer % palette.size()];
  return s;
}

void validate(const Viewport& vp) {
  const bool finite = std::isfinite(vp.x_min) && std::isfinite(vp.x_max) && std::isfinite(vp.y_min) &&
                      std::isfinite(vp.y_max);
  if (!finite || !(vp.x_min < vp.x_max) || !(vp.y_min < vp.y_max)) throw DomainError("viewport bounds are empty");
  if (vp.grid_resolution < 16) throw DomainError("grid resolution must be at least 16");
}

NonFiniteGridError::NonFiniteGridError(std::vector<std::pair<int, int>> cells)
    : NonFiniteError("non-finite evaluation in " + std::to_string(cells.size()) + " grid cell(s)"),
      cells_(std::move(cells)) {}

namespace {

MultiPoly over_plane(const MultiPoly& p) { return p.with_variables(plane_variables()); }

double eval_at(const MultiPoly& p, double x, double y) {
  const std::array<double, 2> v{x, y};
  return evaluate_float(p, v);
}

// Fills values[j * (n + 1) + i] for node (i, j); NaN marks a failed node.
std::vector<double> sample_grid(const MultiPoly& f, const Viewport& vp, unsigned workers) {
  const int n = vp.grid_resolution;
  const std::size_t stride = static_cast<std::size_t>(n) + 1;
  std::vector<double> values(stride * stride);
  const double dx = (vp.x_max - vp.x_min) / n;
  const double dy = (vp.y_max - vp.y_min) / n;
  auto rows = [&](unsigned first, unsigned step) {
    for (std::size_t j = first; j < stride; j += step) {
      const double y = vp.y_min + static_cast<double>(j) * dy;
      for (std::size_t i = 0; i < stride; ++i) {
        const double x = vp.x_min + static_cast<double>(i) * dx;
        double v;
        try {
          v = eval_at(f, x, y);
        } catch (const NonFiniteError&) {
          v = std::numeric_limits<double>::quiet_NaN();
        }
        values[j * stride + i] = v;
      }
    }
  };
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(stride));
  if (workers == 1) {
    rows(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(rows, w, workers);
  }
  return values;
}

Point2 lerp(Point2 a, double va, Point2 b, double vb) {
  const double s = va / (va - vb);
  return {a.x + s * (b.x - a.x), a.y + s * (b.y - a.y)};
}

}  // namespace

CurveMesh marching_squares(const ImplicitCurve& curve, const Viewport& vp, unsigned workers) {
  validate(vp);
  const MultiPoly f = over_plane(curve.poly);
  const int n = vp.grid_resolution;
  const std::size_t stride = static_cast<std::size_t>(n) + 1;
  const std::vector<double> values = sample_grid(f, vp, workers);
  const double dx = (vp.x_max - vp.x_min) / n;
  const double dy = (vp.y_max - vp.y_min) / n;

  CurveMesh mesh;
  std::vector<std::pair<int, int>> bad;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      // Corners counter-clockwise from bottom left; edge k joins corner k and k+1.
      const std::array<Point2, 4> c{Point2{vp.x_min + i * dx, vp.y_min + j * dy},
                                    Point2{vp.x_min + (i + 1) * dx, vp.y_min + j * dy},
                                    Point2{vp.x_min + (i + 1) * dx, vp.y_min + (j + 1) * dy},
                                    Point2{vp.x_min + i * dx, vp.y_min + (j + 1) * dy}};
      const std::size_t base = static_cast<std::size_t>(j) * stride + static_cast<std::size_t>(i);
      const std::array<double, 4> v{values[base], values[base + 1], values[base + stride + 1], values[base + stride]};
      if (std::any_of(v.begin(), v.end(), [](double a) { return std::isnan(a); })) {
        bad.emplace_back(i, j);
        continue;
      }
      std::array<bool, 4> pos{};
      for (int k = 0; k < 4; ++k) pos[k] = v[k] >= 0;
      auto crossing = [&](int e) { return lerp(c[e], v[e], c[(e + 1) % 4], v[(e + 1) % 4]); };
      std::vector<int> edges;
      for (int e = 0; e < 4; ++e) {
        if (pos[e] != pos[(e + 1) % 4]) edges.push_back(e);
      }
      if (edges.size() == 2) {
        mesh.segments.push_back({crossing(edges[0]), crossing(edges[1])});
      } else if (edges.size() == 4) {
        double centre;
        try {
          centre = eval_at(f, c[0].x + dx / 2, c[0].y + dy / 2);
        } catch (const NonFiniteError&) {
          bad.emplace_back(i, j);
          continue;
        }
        if ((centre >= 0) == pos[0]) {
          // Corners 0 and 2 connect through the centre: cut off 1 and 3.
          mesh.segments.push_back({crossing(0), crossing(1)});
          mesh.segments.push_back({crossing(2), crossing(3)});
        } else {
          mesh.segments.push_back({crossing(3), crossing(0)});
          mesh.segments.push_back({crossing(1), crossing(2)});
        }
      }
    }
  }
  if (!bad.empty()) throw NonFiniteGridError(std::move(bad));
  return mesh;
}

CurveMesh sample_parametric(const RationalParametrization& param, std::pair<double, double> t_range, int n,
                            const Viewport& vp) {
  if (n < 2) throw DomainError("at least two samples are required");
  if (!(t_range.first < t_range.second) || !std::isfinite(t_range.first) || !std::isfinite(t_range.second)) {
    throw DomainError("empty parameter range");
  }
  validate(vp);
  const double tol = 0.02 * vp.diagonal();
  constexpr int kMaxDepth = 20;

  struct Sample {
    double t;
    double w;
    Point2 p;
  };
  auto sample = [&](double t) {
    const std::array<double, 1> at{t};
    Sample s{t, evaluate_float(param.denom, at), {}};
    if (s.w != 0) s.p = {evaluate_float(param.num_x, at) / s.w, evaluate_float(param.num_y, at) / s.w};
    return s;
  };

  CurveMesh mesh;
  auto refine = [&](auto&& self, const Sample& a, const Sample& b, int depth) -> void {
    if ((a.w > 0) != (b.w > 0)) {
      mesh.gaps.push_back((a.t + b.t) / 2);
      return;
    }
    if (std::hypot(b.p.x - a.p.x, b.p.y - a.p.y) <= tol || depth >= kMaxDepth) {
      mesh.segments.push_back({a.p, b.p});
      return;
    }
    const Sample m = sample((a.t + b.t) / 2);
    if (m.w == 0) {
      mesh.gaps.push_back(m.t);
      return;
    }
    self(self, a, m, depth + 1);
    self(self, m, b, depth + 1);
  };

  const double step = (t_range.second - t_range.first) / (n - 1);
  std::optional<Sample> prev;
  for (int k = 0; k < n; ++k) {
    const double t = k == n - 1 ? t_range.second : t_range.first + k * step;
    const Sample s = sample(t);
    if (s.w == 0) {
      mesh.gaps.push_back(t);
      prev.reset();
      continue;
    }
    if (prev) refine(refine, *prev, s, 0);
    prev = s;
  }
  return mesh;
}

CurveMesh sample_circle(double cx, double cy, double radius, int segments) {
  if (!(radius > 0)) throw DomainError("circle radius must be positive");
  if (segments < 3) throw DomainError("a circle needs at least three segments");
  CurveMesh mesh;
  auto at = [&](int k) {
    const double a = 2 * std::numbers::pi * k / segments;
    return Point2{cx + radius * std::cos(a), cy + radius * std::sin(a)};
  };
  for (int k = 0; k < segments; ++k) mesh.segments.push_back({at(k), at(k + 1 == segments ? 0 : k + 1)});
  return mesh;
}

double mesh_residual_ratio(const CurveMesh& mesh, const ImplicitCurve& curve, const Viewport& vp) {
  const MultiPoly f = over_plane(curve.poly);
  const MultiPoly fx = partial_derivative(f, "x");
  const MultiPoly fy = partial_derivative(f, "y");
  const double h = vp.cell_diagonal();
  auto grad = [&](double x, double y) { return std::hypot(eval_at(fx, x, y), eval_at(fy, x, y)); };
  double worst = 0;
  auto check = [&](Point2 p) {
    const double value = std::abs(eval_at(f, p.x, p.y));
    if (value == 0) return;
    double g = grad(p.x, p.y);
    for (const double sx : {-0.5, 0.5}) {
      for (const double sy : {-0.5, 0.5}) g = std::max(g, grad(p.x + sx * h, p.y + sy * h));
    }
    const double bound = 10 * h * g;
    worst = std::max(worst, bound > 0 ? value / bound : std::numeric_limits<double>::infinity());
  };
  for (const auto& s : mesh.segments) {
    check(s.a);
    check(s.b);
  }
  return worst;
}

std::vector<std::size_t> sector_counts(const CurveMesh& mesh) {
  std::vector<std::size_t> counts(3, 0);
  auto add = [&](Point2 p) {
    if (p.x == 0 && p.y == 0) return;
    // Shift by a half sector so that sector k is centred on 2*pi*k/3.
    double a = std::atan2(p.y, p.x) + std::numbers::pi / 3;
    if (a < 0) a += 2 * std::numbers::pi;
    const auto k = static_cast<std::size_t>(a / (2 * std::numbers::pi / 3));
    ++counts[std::min<std::size_t>(k, 2)];
  };
  for (const auto& s : mesh.segments) {
    add(s.a);
    add(s.b);
  }
  return counts;
}

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

std::string xml_escape(const std::string& text) {
  std::string out;
  for (const char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

void emit_svg(const std::vector<CurveMesh>& meshes, const Viewport& vp, std::ostream& out) {
  validate(vp);
  constexpr double kWidth = 800;
  const double height = std::round(kWidth * (vp.y_max - vp.y_min) / (vp.x_max - vp.x_min));
  auto px = [&](double x) { return (x - vp.x_min) / (vp.x_max - vp.x_min) * kWidth; };
  auto py = [&](double y) { return (vp.y_max - y) / (vp.y_max - vp.y_min) * height; };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(kWidth) << "\" height=\""
      << fmt(height) << "\" viewBox=\"0 0 " << fmt(kWidth) << ' ' << fmt(height) << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << fmt(kWidth) << "\" height=\"" << fmt(height) << "\" fill=\"white\"/>\n";
  out << "<g stroke=\"#999999\" stroke-width=\"0.75\">\n";
  if (vp.y_min <= 0 && 0 <= vp.y_max) {
    out << "<line x1=\"0.000\" y1=\"" << fmt(py(0)) << "\" x2=\"" << fmt(kWidth) << "\" y2=\"" << fmt(py(0))
        << "\"/>\n";
  }
  if (vp.x_min <= 0 && 0 <= vp.x_max) {
    out << "<line x1=\"" << fmt(px(0)) << "\" y1=\"0.000\" x2=\"" << fmt(px(0)) << "\" y2=\"" << fmt(height)
        << "\"/>\n";
  }
  out << "</g>\n";
  for (std::size_t layer = 0; layer < meshes.size(); ++layer) {
    const LayerStyle style = vp.style(layer);
    std::string d;
    for (const auto& s : meshes[layer].segments) {
      if (!d.empty()) d += ' ';
      d += "M" + fmt(px(s.a.x)) + "," + fmt(py(s.a.y)) + " L" + fmt(px(s.b.x)) + "," + fmt(py(s.b.y));
    }
    if (d.empty()) d = "M0,0";
    out << "<path fill=\"none\" stroke=\"" << style.stroke << "\" stroke-width=\"" << fmt(style.stroke_width)
        << "\" stroke-linecap=\"round\"";
    if (!meshes[layer].source.empty()) out << " data-source=\"" << xml_escape(meshes[layer].source) << '"';
    out << " d=\"" << d << "\"/>\n";
  }
  out << "</svg>\n";
}

void emit_svg(const std::vector<CurveMesh>& meshes, const Viewport& vp, const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::system_error(errno ? errno : EACCES, std::generic_category(), "cannot write " + path.string());
  emit_svg(meshes, vp, file);
  file.flush();
  if (!file) throw std::system_error(EIO, std::generic_category(), "cannot write " + path.string());
}

void write_csv(const CurveMesh& mesh, std::ostream& out) {
  char buf[128];
  for (const auto& s : mesh.segments) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", s.a.x, s.a.y, s.b.x, s.b.y);
    out << buf;
  }
}

}  // namespace trif
