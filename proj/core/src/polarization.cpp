#include "inclab/polarization.hpp"

#include "inclab/errors.hpp"
#include "inclab/newtonian.hpp"

#include <Eigen/Dense>
#include <Eigen/Geometry>

#include <cmath>
#include <numbers>

namespace inclab {

PolarizationTensor polarization_tensor(const TransmissionSolver& solver) {
  const BoundaryGrid& grid = solver.grid();
  const int d = grid.dim;
  Eigen::MatrixXd raw(d, d);
  for (int i = 0; i < d; ++i) {
    const Density phi = solver.solve_direction(Eigen::VectorXd::Unit(d, i));
    const Eigen::VectorXd weighted = phi.cwiseProduct(grid.weights);
    for (int j = 0; j < d; ++j) raw(i, j) = grid.nodes.row(j).dot(weighted);
  }
  PolarizationTensor pt;
  pt.k = solver.contrast().k;
  pt.volume = grid.enclosed_measure();
  pt.asymmetry = (raw - raw.transpose()).cwiseAbs().maxCoeff();
  pt.M = 0.5 * (raw + raw.transpose());
  return pt;
}

PolarizationTensor polarization_tensor(const BoundaryGrid& grid, double k) {
  return polarization_tensor(TransmissionSolver(grid, Contrast(k)));
}

namespace {

PolarizationTensor from_factors(const Eigen::VectorXd& a, double volume, double k) {
  const Contrast c(k);
  PolarizationTensor pt;
  pt.k = c.k;
  pt.volume = volume;
  pt.M = Eigen::MatrixXd::Zero(a.size(), a.size());
  for (Eigen::Index j = 0; j < a.size(); ++j) pt.M(j, j) = volume * (k - 1.0) / (1.0 + (k - 1.0) * a(j));
  return pt;
}

}  // namespace

PolarizationTensor ellipsoid_pt(const Ellipse& e, double k) {
  PolarizationTensor pt = from_factors(depolarization_factors_2d(e).a, std::numbers::pi * e.a * e.b, k);
  const Eigen::Matrix2d r = Eigen::Rotation2Dd(e.rotation).toRotationMatrix();
  pt.M = r * pt.M * r.transpose();
  return pt;
}

PolarizationTensor ellipsoid_pt(const Ellipsoid& e, double k) {
  return from_factors(depolarization_factors(e).a, measure(e), k);
}

std::string to_string(BoundForm form) { return form == BoundForm::Direct ? "direct" : "normalized"; }

BoundReport hs_bounds(const PolarizationTensor& pt) {
  const int d = pt.dim();
  const double k = pt.k;
  const double vol = pt.volume;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(pt.M);
  if (!lu.isInvertible()) throw SolveError("hs_bounds: polarization tensor is singular");

  BoundReport r;
  r.tr_M = pt.M.trace();
  r.tr_Minv_scaled = vol * lu.inverse().trace();
  if (k > 1.0) {
    r.form = BoundForm::Direct;
    r.lhs1 = r.tr_M;
    r.bound1_rhs = vol * (k - 1.0) * (d - 1.0 + 1.0 / k);
    r.lhs2 = r.tr_Minv_scaled;
    r.bound2_rhs = (d - 1.0 + k) / (k - 1.0);
  } else {
    r.form = BoundForm::Normalized;
    r.lhs1 = r.tr_M / (k - 1.0);
    r.bound1_rhs = vol * (d - 1.0 + 1.0 / k);
    r.lhs2 = (k - 1.0) * r.tr_Minv_scaled;
    r.bound2_rhs = d - 1.0 + k;
  }
  r.slack1 = r.bound1_rhs - r.lhs1;
  r.slack2 = r.bound2_rhs - r.lhs2;
  r.tol1 = kSaturationTolerance * vol;
  r.tol2 = kSaturationTolerance;
  r.saturated1 = std::abs(r.slack1) <= r.tol1;
  r.saturated2 = std::abs(r.slack2) <= r.tol2;
  return r;
}

double minimal_trace_target(double k, double volume, int d) {
  if (k == 1.0) throw DomainError("minimal_trace_target: k must differ from 1");
  return volume * d * d * (k - 1.0) / (k + d - 1.0);
}

}  // namespace inclab
