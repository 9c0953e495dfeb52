#pragma once

#include "inclab/geometry.hpp"

#include <Eigen/Core>

namespace inclab {

/// Scalar density sampled at the nodes of a BoundaryGrid.
using Density = Eigen::VectorXd;

/// Fundamental solution of the Laplacian with Delta G = delta:
/// (1/2pi) log|x| in 2D, -1/(4 pi |x|) in 3D.
double laplace_green(int dim, const Eigen::Ref<const Eigen::VectorXd>& r);
Eigen::VectorXd laplace_green_gradient(int dim, const Eigen::Ref<const Eigen::VectorXd>& r);

/// Throws NearBoundaryError if x lies within `factor` local node spacings of
/// some boundary node.
void require_well_separated(const BoundaryGrid& grid, const Eigen::Ref<const Eigen::VectorXd>& x,
                            double factor = 2.0);

/// S[phi](x) = sum_i G(x - y_i) phi_i w_i for x off the boundary.
double single_layer_eval(const BoundaryGrid& grid, const Density& phi, const Eigen::Ref<const Eigen::VectorXd>& x);

Eigen::VectorXd single_layer_gradient(const BoundaryGrid& grid, const Density& phi,
                                      const Eigen::Ref<const Eigen::VectorXd>& x);

/// Nystrom matrix of the Neumann-Poincare operator K* on a 2D grid.
struct NpoOperator {
  Eigen::MatrixXd matrix;

  Density apply(const Density& phi) const { return matrix * phi; }
  Eigen::Index size() const { return matrix.rows(); }
};

NpoOperator npo_matrix(const BoundaryGrid& grid);

enum class Side { Interior, Exterior };

/// One-sided normal derivative of S[phi] at every node of a SmoothCurve grid,
/// from probes at x_i -/+ h n_i (h = offset * grid.scale) evaluated with
/// graded Gauss-Legendre panels on the spectral interpolant of phi, then
/// Richardson extrapolated from h and 2h.
Density one_sided_normal_derivative(const BoundaryGrid& grid, const Density& phi, Side side,
                                    double offset = 1e-4);

/// Max over nodes and both sides of |d/dn S[phi]|_(+/-) - (+/-1/2 I + K*)phi|,
/// normalized by the largest reference value.
double jump_check(const BoundaryGrid& grid, const Density& phi);

/// Max over j of |int (x_j - y_j) <x - y, n(y)>/|x - y|^3 + int n_j(y)/|x - y||
/// on a 3D grid, for interior x.
double green_identity_check(const BoundaryGrid& grid, const Eigen::Ref<const Eigen::VectorXd>& x);

/// Spectral (trigonometric) interpolant of equispaced periodic samples.
class TrigInterpolant {
 public:
  explicit TrigInterpolant(const Eigen::VectorXd& samples);

  double operator()(double t) const;

 private:
  double mean_ = 0.0;
  Eigen::VectorXd cos_;
  Eigen::VectorXd sin_;
  double nyquist_ = 0.0;
  int n_ = 0;
};

}  // namespace inclab
