#include "inclab/transmission.hpp"

#include "inclab/errors.hpp"

#include <cmath>
#include <sstream>

namespace inclab {

Contrast::Contrast(double value) : k(value) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw DomainError("contrast k must be positive and finite");
  }
  if (value == 1.0) throw DomainError("contrast k must differ from 1");
}

TransmissionSolver::TransmissionSolver(const BoundaryGrid& grid, Contrast k)
    : grid_(&grid), k_(k), npo_(npo_matrix(grid)) {
  const Eigen::Index n = grid.size();
  system_ = k_.lambda() * Eigen::MatrixXd::Identity(n, n) - npo_.matrix;
  lu_.compute(system_);
}

Density TransmissionSolver::solve(const Density& rhs) const {
  if (rhs.size() != system_.rows()) throw std::invalid_argument("TransmissionSolver: rhs length mismatch");
  Density phi = lu_.solve(rhs);
  const double scale = std::max(rhs.lpNorm<Eigen::Infinity>(), 1e-300);
  const double resid = (system_ * phi - rhs).lpNorm<Eigen::Infinity>() / scale;
  if (!(resid <= 1e-10)) {
    std::ostringstream os;
    os << "transmission solve residual " << resid << " exceeds 1e-10";
    throw SolveError(os.str());
  }
  return phi;
}

Density TransmissionSolver::solve_direction(const Eigen::Ref<const Eigen::VectorXd>& a) const {
  if (a.size() != grid_->dim) throw std::invalid_argument("solve_direction: direction dimension mismatch");
  return solve(grid_->normals.transpose() * a);
}

Density solve_density(const BoundaryGrid& grid, Contrast k, const Eigen::Ref<const Eigen::VectorXd>& a) {
  return TransmissionSolver(grid, k).solve_direction(a);
}

FieldReport interior_field(const BoundaryGrid& grid, const Density& phi, const Eigen::Ref<const Eigen::VectorXd>& a,
                           const InteriorSample& sample) {
  if (sample.size() == 0) throw EmptySampleError("interior_field: empty sample");
  FieldReport rep;
  rep.phi = phi;
  rep.gradients.resize(grid.dim, sample.size());
  for (Eigen::Index s = 0; s < sample.size(); ++s) {
    rep.gradients.col(s) = a + single_layer_gradient(grid, phi, sample.points.col(s));
  }
  rep.mean_gradient = rep.gradients.rowwise().mean();
  const double norm = rep.mean_gradient.norm();
  double worst = 0.0;
  for (Eigen::Index s = 0; s < sample.size(); ++s) {
    worst = std::max(worst, (rep.gradients.col(s) - rep.mean_gradient).norm());
  }
  rep.delta = norm > 0.0 ? worst / norm : worst;
  return rep;
}

double field_perturbation(const BoundaryGrid& grid, const Density& phi, const Eigen::Ref<const Eigen::VectorXd>& x) {
  return single_layer_eval(grid, phi, x);
}

LambdaMap lambda_map(const BoundaryGrid& grid, Contrast k, const InteriorSample& sample, double tol) {
  const TransmissionSolver solver(grid, k);
  const int d = grid.dim;
  LambdaMap out;
  out.matrix.resize(d, d);
  out.deltas.resize(d);
  for (int j = 0; j < d; ++j) {
    const Eigen::VectorXd e = Eigen::VectorXd::Unit(d, j);
    const FieldReport rep = interior_field(grid, solver.solve_direction(e), e, sample);
    out.matrix.col(j) = rep.mean_gradient;
    out.deltas(j) = rep.delta;
  }
  out.determinant = out.matrix.determinant();
  out.uniform = out.deltas.maxCoeff() <= tol;
  out.invertible = std::abs(out.determinant) > 1e-12 * std::pow(out.matrix.norm(), d);
  return out;
}

std::vector<KIndependenceRow> k_independence_check(const BoundaryGrid& grid, const std::vector<double>& ks,
                                                   const InteriorSample& sample) {
  if (ks.size() < 2) throw std::invalid_argument("k_independence_check: need at least two contrasts");
  std::vector<KIndependenceRow> rows;
  for (double kv : ks) {
    const TransmissionSolver solver(grid, Contrast(kv));
    for (int j = 0; j < grid.dim; ++j) {
      const Eigen::VectorXd e = Eigen::VectorXd::Unit(grid.dim, j);
      const FieldReport rep = interior_field(grid, solver.solve_direction(e), e, sample);
      rows.push_back({kv, j, rep.delta, rep.mean_gradient});
    }
  }
  return rows;
}

}  // namespace inclab
