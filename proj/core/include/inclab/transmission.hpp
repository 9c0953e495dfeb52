#pragma once

#include "inclab/geometry.hpp"
#include "inclab/layerpot.hpp"

#include <Eigen/Core>
#include <Eigen/LU>

#include <vector>

namespace inclab {

/// Conductivity ratio of the inclusion to the background.
struct Contrast {
  double k = 2.0;

  explicit Contrast(double value);

  /// (k + 1) / (2 (k - 1)), the spectral parameter of the boundary equation.
  double lambda() const { return (k + 1.0) / (2.0 * (k - 1.0)); }
};

/// Factored system lambda I - K* on a 2D grid; reusable across right-hand sides.
class TransmissionSolver {
 public:
  TransmissionSolver(const BoundaryGrid& grid, Contrast k);

  /// Solves (lambda I - K*) phi = rhs; throws SolveError if the relative
  /// residual exceeds 1e-10.
  Density solve(const Density& rhs) const;

  /// Density for the uniform loading u0 = a . x, rhs = a . n.
  Density solve_direction(const Eigen::Ref<const Eigen::VectorXd>& a) const;

  const BoundaryGrid& grid() const { return *grid_; }
  const Contrast& contrast() const { return k_; }
  const NpoOperator& npo() const { return npo_; }

 private:
  const BoundaryGrid* grid_;
  Contrast k_;
  NpoOperator npo_;
  Eigen::MatrixXd system_;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
};

Density solve_density(const BoundaryGrid& grid, Contrast k, const Eigen::Ref<const Eigen::VectorXd>& a);

struct FieldReport {
  Eigen::VectorXd mean_gradient;
  double delta = 0.0;  // max_x |grad u(x) - mean| / |mean|
  Eigen::MatrixXd gradients;  // d x samples
  Density phi;
};

/// grad u = a + grad S[phi] over the sample points.
FieldReport interior_field(const BoundaryGrid& grid, const Density& phi, const Eigen::Ref<const Eigen::VectorXd>& a,
                           const InteriorSample& sample);

/// u(x) - a . x = S[phi](x) at an exterior point.
double field_perturbation(const BoundaryGrid& grid, const Density& phi, const Eigen::Ref<const Eigen::VectorXd>& x);

struct LambdaMap {
  Eigen::MatrixXd matrix;       // columns = mean interior gradients for e_1..e_d
  Eigen::VectorXd deltas;       // per direction
  double determinant = 0.0;
  bool uniform = false;         // every delta below tolerance
  bool invertible = false;
};

LambdaMap lambda_map(const BoundaryGrid& grid, Contrast k, const InteriorSample& sample, double tol = 1e-6);

struct KIndependenceRow {
  double k = 0.0;
  int direction = 0;
  double delta = 0.0;
  Eigen::VectorXd mean_gradient;
};

std::vector<KIndependenceRow> k_independence_check(const BoundaryGrid& grid, const std::vector<double>& ks,
                                                   const InteriorSample& sample);

}  // namespace inclab
