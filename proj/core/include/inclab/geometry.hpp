#pragma once

#include <Eigen/Core>

#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace inclab {

// ---------------------------------------------------------------------------
// Shapes
// ---------------------------------------------------------------------------

/// Ellipse x'^2/a^2 + y'^2/b^2 <= 1 in a frame rotated by `rotation` radians
/// about `center`.
struct Ellipse {
  double a = 1.0;
  double b = 1.0;
  Eigen::Vector2d center = Eigen::Vector2d::Zero();
  double rotation = 0.0;
};

/// Simple polygon with counterclockwise vertices.
struct Polygon {
  std::vector<Eigen::Vector2d> vertices;
};

struct FourierMode {
  int m = 2;
  double cos_coeff = 0.0;
  double sin_coeff = 0.0;
};

/// Star-shaped curve r(t) = r0 (1 + sum_m eps_m cos(m t) + delta_m sin(m t)).
struct FourierStar {
  double r0 = 1.0;
  std::vector<FourierMode> modes;

  double radius(double t) const;
  double radius_d1(double t) const;
  double radius_d2(double t) const;
};

/// Axis-aligned ellipsoid x1^2/c1^2 + x2^2/c2^2 + x3^2/c3^2 <= 1.
struct Ellipsoid {
  double c1 = 1.0;
  double c2 = 1.0;
  double c3 = 1.0;
};

/// Axis-aligned box [-h1,h1] x [-h2,h2] x [-h3,h3].
struct Cuboid {
  double h1 = 0.5;
  double h2 = 0.5;
  double h3 = 0.5;
};

using ShapeSpec = std::variant<Ellipse, Polygon, FourierStar, Ellipsoid, Cuboid>;

int dimension(const ShapeSpec& shape);

/// Throws InvalidShapeError if the shape violates its invariants.
void validate(const ShapeSpec& shape);

std::string describe(const ShapeSpec& shape);

/// Area in 2D, volume in 3D.
double measure(const ShapeSpec& shape);

ShapeSpec make_disk(double radius = 1.0);
ShapeSpec make_unit_square();
ShapeSpec make_kite();
ShapeSpec make_unit_cube();

// ---------------------------------------------------------------------------
// Boundary discretization
// ---------------------------------------------------------------------------

enum class GridKind {
  SmoothCurve,  // equispaced-in-parameter trapezoid nodes on a C^2 closed curve
  PanelCurve,   // Gauss-Legendre panels, graded toward polygon corners
  Surface,      // 3D product or panel surface grid
};

struct CurveSample {
  Eigen::Vector2d point;
  Eigen::Vector2d d1;
  Eigen::Vector2d d2;
};

/// 2*pi-periodic counterclockwise parametrization of a smooth closed curve.
using CurveMap = std::function<CurveSample(double)>;

struct BoundaryGrid {
  int dim = 2;
  GridKind kind = GridKind::SmoothCurve;
  Eigen::MatrixXd nodes;    // dim x n
  Eigen::MatrixXd normals;  // dim x n, unit outward
  Eigen::VectorXd weights;  // n, surface measure
  Eigen::VectorXd spacing;  // n, local node spacing
  double scale = 1.0;       // largest node distance from the node centroid

  // Populated for SmoothCurve grids only.
  Eigen::VectorXd params;
  Eigen::VectorXd speed;
  Eigen::VectorXd curvature;
  CurveMap curve;

  Eigen::Index size() const { return weights.size(); }
  auto node(Eigen::Index i) const { return nodes.col(i); }
  auto normal(Eigen::Index i) const { return normals.col(i); }

  /// |Omega| from the divergence theorem, (1/d) int <y, n> dsigma.
  double enclosed_measure() const;
  Eigen::VectorXd centroid() const;
};

/// Boundary grid with n nodes (smooth curves), n nodes per edge before
/// grading (polygons), n polar x 2n azimuthal nodes (ellipsoids), or n x n
/// nodes per face (cuboids). Requires n >= 16.
BoundaryGrid discretize(const ShapeSpec& shape, int n);

/// Resolution used when a caller does not choose one: 256 nodes on smooth
/// curves, 64 per polygon edge, 64 polar rings on ellipsoids, 32 per cuboid face.
int default_resolution(const ShapeSpec& shape);

/// Product grid: Gauss-Legendre in the polar angle, trapezoid in azimuth.
BoundaryGrid discretize_ellipsoid(const Ellipsoid& e, int n_polar, int n_azimuth);

/// Depth of dyadic panel refinement toward polygon corners.
inline constexpr int kCornerRefinementDepth = 6;

// ---------------------------------------------------------------------------
// Interior sampling
// ---------------------------------------------------------------------------

struct InteriorSample {
  Eigen::MatrixXd points;  // dim x count
  double margin = 0.0;

  Eigen::Index size() const { return points.cols(); }
};

/// Deterministic quasi-uniform interior points, each at distance >= margin
/// from every boundary node. Throws EmptySampleError if infeasible.
InteriorSample interior_points(const ShapeSpec& shape, int count, double margin);
InteriorSample interior_points(const BoundaryGrid& grid, int count, double margin);

/// Gauss solid-angle indicator: ~1 inside, ~0 outside, for points away from
/// the boundary.
double winding_indicator(const BoundaryGrid& grid, const Eigen::Ref<const Eigen::VectorXd>& x);

/// Minimum distance from x to the grid nodes.
double node_distance(const BoundaryGrid& grid, const Eigen::Ref<const Eigen::VectorXd>& x);

}  // namespace inclab
