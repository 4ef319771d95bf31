#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "trif/curvelab/curve.hpp"
#include "trif/curvelab/parametrization.hpp"
#include "trif/error.hpp"

namespace trif {

struct LayerStyle {
  std::string stroke = "#1f77b4";
  double stroke_width = 1.5;
};

struct Viewport {
  double x_min = -2.5;
  double x_max = 2.5;
  double y_min = -2.5;
  double y_max = 2.5;
  int grid_resolution = 256;  // cells per side
  std::vector<LayerStyle> styles;  // layer i uses styles[i % size], or the default palette

  double diagonal() const;
  double cell_diagonal() const;
  LayerStyle style(std::size_t layer) const;
};

// Throws DomainError unless x_min < x_max, y_min < y_max and
// grid_resolution >= 16.
void validate(const Viewport& vp);

struct Point2 {
  double x = 0;
  double y = 0;
  friend bool operator==(const Point2&, const Point2&) = default;
};

struct Segment {
  Point2 a;
  Point2 b;
};

struct CurveMesh {
  std::vector<Segment> segments;  // unordered segment soup
  std::string source;
  std::vector<double> gaps;  // parameter values skipped at poles (sample_parametric)
};

// Grid nodes where the defining polynomial evaluated to inf/nan.
class NonFiniteGridError : public NonFiniteError {
 public:
  NonFiniteGridError(std::vector<std::pair<int, int>> cells);
  const std::vector<std::pair<int, int>>& cells() const { return cells_; }

 private:
  std::vector<std::pair<int, int>> cells_;
};

/// Zero set of `curve` over `vp`. Rows are evaluated on up to `workers`
/// threads (0: hardware concurrency); the result does not depend on it.
CurveMesh marching_squares(const ImplicitCurve& curve, const Viewport& vp, unsigned workers = 0);

/// Polyline through param(t_i) for n uniform samples of t_range, bisected
/// where neighbours are farther apart than 2% of the viewport diagonal.
/// Samples at or across a pole of the denominator leave a gap.
CurveMesh sample_parametric(const RationalParametrization& param, std::pair<double, double> t_range, int n,
                            const Viewport& vp = {});

/// Regular polygon approximating a circle.
CurveMesh sample_circle(double cx, double cy, double radius, int segments = 128);

// Largest |F(p)| / bound(p) over all endpoints, where bound(p) is 10 * cell
// diagonal * the largest gradient norm seen at p and at the corners of a
// cell centred on p. At most 1 when the CurveMesh invariant holds.
double mesh_residual_ratio(const CurveMesh& mesh, const ImplicitCurve& curve, const Viewport& vp);

// Number of mesh endpoints in each of three sectors of width 2*pi/3
// centred on the angles 0, 2*pi/3 and 4*pi/3.
std::vector<std::size_t> sector_counts(const CurveMesh& mesh);

void emit_svg(const std::vector<CurveMesh>& meshes, const Viewport& vp, std::ostream& out);
// Throws std::system_error when the file cannot be written.
void emit_svg(const std::vector<CurveMesh>& meshes, const Viewport& vp, const std::filesystem::path& path);

// One segment per line: x1,y1,x2,y2 with 17 significant digits.
void write_csv(const CurveMesh& mesh, std::ostream& out);

}  // namespace trif
