#pragma once

#include "inclab/geometry.hpp"

#include <Eigen/Core>

namespace inclab {

/// Coefficients a_j of the interior quadratic Newtonian potential of an
/// ellipse or ellipsoid, N(x) = 1/2 sum_j a_j x_j^2 + C. They sum to one.
struct DepolarizationFactors {
  Eigen::VectorXd a;

  double sum() const { return a.sum(); }
};

/// Carlson's symmetric elliptic integral of the second kind,
/// R_D(x, y, z) = 3/2 int_0^inf dt / ((t + z) sqrt((t + x)(t + y)(t + z))),
/// by the duplication algorithm. x, y >= 0 (not both zero), z > 0.
double carlson_rd(double x, double y, double z);

DepolarizationFactors depolarization_factors(const Ellipsoid& e);
DepolarizationFactors depolarization_factors_2d(const Ellipse& e);

/// Newtonian potential N(x) = int_Omega G(x - y) dy (Delta G = delta, so
/// Delta N = 1 inside) by reduction to a boundary integral over `grid`.
double newtonian_potential(const BoundaryGrid& grid, const Eigen::Ref<const Eigen::VectorXd>& x);

/// Same, on a default-resolution grid for `shape`.
double newtonian_potential(const ShapeSpec& shape, const Eigen::Ref<const Eigen::VectorXd>& x);

/// Independent volume route: polar coordinates centred at x with the radial
/// integral done in closed form and the angular integral by quadrature.
/// `angular_n` = 0 picks a per-shape default.
double newtonian_potential_volume(const ShapeSpec& shape, const Eigen::Ref<const Eigen::VectorXd>& x,
                                  int angular_n = 0);

/// Default boundary resolution used by the shape overloads.
int newtonian_grid_resolution(const ShapeSpec& shape);

struct QuadraticFitReport {
  Eigen::MatrixXd A;  // symmetric d x d
  Eigen::VectorXd b;
  double C = 0.0;
  double rms_residual = 0.0;  // relative to the range of N over the sample
  double max_residual = 0.0;  // relative, max abs
  double range = 0.0;
  int samples = 0;
};

/// Least-squares fit of values to x.Ax + b.x + C over the sample columns.
QuadraticFitReport quadratic_fit(const Eigen::MatrixXd& points, const Eigen::VectorXd& values);

/// Fits the Newtonian potential of `shape` over `sample`.
QuadraticFitReport quadratic_interior_fit(const ShapeSpec& shape, const InteriorSample& sample);

}  // namespace inclab
