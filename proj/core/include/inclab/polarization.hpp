#pragma once

#include "inclab/geometry.hpp"
#include "inclab/transmission.hpp"

#include <Eigen/Core>

#include <string>

namespace inclab {

struct PolarizationTensor {
  Eigen::MatrixXd M;  // symmetrized
  double k = 0.0;
  double volume = 0.0;
  double asymmetry = 0.0;  // max |M_ij - M_ji| before symmetrization

  int dim() const { return static_cast<int>(M.rows()); }
};

/// M_ij = int y_j phi_i dsigma with phi_i the transmission density for e_i.
PolarizationTensor polarization_tensor(const BoundaryGrid& grid, double k);
PolarizationTensor polarization_tensor(const TransmissionSolver& solver);

/// Closed form M = R diag(|Omega| (k-1) / (1 + (k-1) a_j)) R^T.
PolarizationTensor ellipsoid_pt(const Ellipse& e, double k);
PolarizationTensor ellipsoid_pt(const Ellipsoid& e, double k);

enum class BoundForm {
  Direct,      // k > 1: Tr M <= |Omega|(k-1)(d-1+1/k), |Omega| Tr M^-1 <= (d-1+k)/(k-1)
  Normalized,  // k < 1: Tr M/(k-1) <= |Omega|(d-1+1/k), (k-1)|Omega| Tr M^-1 <= d-1+k
};

std::string to_string(BoundForm form);

struct BoundReport {
  double tr_M = 0.0;
  double tr_Minv_scaled = 0.0;  // |Omega| Tr M^-1
  double lhs1 = 0.0;
  double lhs2 = 0.0;
  double bound1_rhs = 0.0;
  double bound2_rhs = 0.0;
  double slack1 = 0.0;  // rhs - lhs
  double slack2 = 0.0;
  double tol1 = 0.0;  // saturation tolerances
  double tol2 = 0.0;
  bool saturated1 = false;
  bool saturated2 = false;
  BoundForm form = BoundForm::Direct;

  /// Both inequalities hold up to the saturation tolerance.
  bool holds() const { return slack1 >= -tol1 && slack2 >= -tol2; }
};

inline constexpr double kSaturationTolerance = 1e-5;

BoundReport hs_bounds(const PolarizationTensor& pt);

/// Trace of the tensor d(k-1)/(k+d-1) |Omega| I, the smallest possible among
/// inclusions of the given volume.
double minimal_trace_target(double k, double volume, int d);

}  // namespace inclab
