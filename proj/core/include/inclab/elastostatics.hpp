#pragma once

#include "inclab/geometry.hpp"

#include <Eigen/Core>

#include <optional>
#include <string>

namespace inclab {

/// Lame constants of the background (lambda, mu) and inclusion (lambda_t, mu_t).
struct LameParams {
  double lambda = 1.0;
  double mu = 1.0;
  double lambda_t = 1.0;
  double mu_t = 1.0;
};

/// Name and statement of the first violated admissibility condition, if any:
/// "ellipticity" (mu > 0, d lambda + 2 mu > 0 for both phases) or
/// "ordering" ((lambda - lambda_t)(mu - mu_t) >= 0).
std::optional<std::string> lame_violation(const LameParams& p, int d = 3);

/// Throws DomainError naming the violated condition.
void validate(const LameParams& p, int d = 3);

struct KelvinConstants {
  double alpha1 = 0.0;  // (1/mu + 1/(2mu + lambda)) / 2
  double alpha2 = 0.0;  // (1/mu - 1/(2mu + lambda)) / 2
};

KelvinConstants kelvin_constants(double lambda, double mu);

/// Gamma(x) = -alpha1/(4 pi) I/|x| - alpha2/(4 pi) x x^T/|x|^3.
Eigen::Matrix3d kelvin(double lambda, double mu, const Eigen::Vector3d& x);

/// Traction of the linear field x -> A x: lambda tr(A) n + mu (A + A^T) n.
Eigen::VectorXd conormal_linear(const Eigen::MatrixXd& A, double lambda, double mu,
                                const Eigen::Ref<const Eigen::VectorXd>& n);

/// sum_i Gamma(x - y_i) psi_i w_i for a 3 x n density psi.
Eigen::Vector3d elastic_single_layer(const BoundaryGrid& grid, double lambda, double mu, const Eigen::MatrixXd& psi,
                                     const Eigen::Vector3d& x);

/// H[f](x) = (1/4pi) int f(y)/|x - y| dsigma for each row of a 3 x n density.
Eigen::Vector3d plain_single_layer(const BoundaryGrid& grid, const Eigen::MatrixXd& f, const Eigen::Vector3d& x);

struct IdentityResidual {
  Eigen::Vector3d lhs = Eigen::Vector3d::Zero();
  Eigen::Vector3d rhs = Eigen::Vector3d::Zero();
  double coefficient = 0.0;
  double residual = 0.0;  // max_j |lhs - rhs| / (scale of the terms)
};

struct TraceIdentityReport {
  // Kelvin layer of the matrix-phase traction of x -> x against
  // -(2mu + 3lambda)/(2mu + lambda) H[n].
  IdentityResidual matrix_phase;
  // Same Kelvin matrix, inclusion-phase traction: -(2mu_t + 3lambda_t)/(2mu + lambda) H[n].
  IdentityResidual inclusion_phase;
  // Kelvin layer of the traction difference against the coefficient difference.
  IdentityResidual difference;
};

TraceIdentityReport trace_identity_check(const BoundaryGrid& grid, const LameParams& params, const Eigen::Vector3d& x);

/// (lambda + 3 mu)/(lambda + mu); 1 in the incompressible limit lambda = inf.
double kolosov(double lambda, double mu);

}  // namespace inclab
