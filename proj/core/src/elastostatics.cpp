#include "inclab/elastostatics.hpp"

#include "inclab/errors.hpp"
#include "inclab/layerpot.hpp"

#include <cmath>
#include <numbers>

namespace inclab {

namespace {

constexpr double kPi = std::numbers::pi;

void require_surface(const BoundaryGrid& grid) {
  if (grid.dim != 3) throw DomainError("elastic layer potentials need a 3D grid");
}

}  // namespace

std::optional<std::string> lame_violation(const LameParams& p, int d) {
  auto admissible = [d](double lambda, double mu) { return mu > 0.0 && d * lambda + 2.0 * mu > 0.0; };
  if (!admissible(p.lambda, p.mu) || !admissible(p.lambda_t, p.mu_t)) {
    return "ellipticity: need mu > 0 and " + std::to_string(d) + " lambda + 2 mu > 0 in both phases";
  }
  if ((p.lambda - p.lambda_t) * (p.mu - p.mu_t) < 0.0) {
    return "ordering: need (lambda - lambda_t)(mu - mu_t) >= 0";
  }
  return std::nullopt;
}

void validate(const LameParams& p, int d) {
  if (auto v = lame_violation(p, d)) throw DomainError(*v);
}

KelvinConstants kelvin_constants(double lambda, double mu) {
  const double inv_mu = 1.0 / mu;
  const double inv_p = 1.0 / (2.0 * mu + lambda);
  return {0.5 * (inv_mu + inv_p), 0.5 * (inv_mu - inv_p)};
}

Eigen::Matrix3d kelvin(double lambda, double mu, const Eigen::Vector3d& x) {
  const KelvinConstants c = kelvin_constants(lambda, mu);
  const double r = x.norm();
  if (r == 0.0) throw DomainError("kelvin: singular at the origin");
  return -c.alpha1 / (4.0 * kPi * r) * Eigen::Matrix3d::Identity() - c.alpha2 / (4.0 * kPi * r * r * r) * (x * x.transpose());
}

Eigen::VectorXd conormal_linear(const Eigen::MatrixXd& A, double lambda, double mu,
                                const Eigen::Ref<const Eigen::VectorXd>& n) {
  if (A.rows() != A.cols() || A.rows() != n.size()) throw std::invalid_argument("conormal_linear: size mismatch");
  return lambda * A.trace() * n + mu * (A + A.transpose()) * n;
}

Eigen::Vector3d elastic_single_layer(const BoundaryGrid& grid, double lambda, double mu, const Eigen::MatrixXd& psi,
                                     const Eigen::Vector3d& x) {
  require_surface(grid);
  if (psi.rows() != 3 || psi.cols() != grid.size()) throw std::invalid_argument("elastic_single_layer: density shape");
  require_well_separated(grid, x);
  const KelvinConstants c = kelvin_constants(lambda, mu);
  Eigen::Vector3d out = Eigen::Vector3d::Zero();
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    const Eigen::Vector3d r = x - grid.nodes.col(i).head<3>();
    const double d = r.norm();
    const Eigen::Vector3d p = psi.col(i);
    out -= (c.alpha1 / d * p + c.alpha2 * r.dot(p) / (d * d * d) * r) * grid.weights(i);
  }
  return out / (4.0 * kPi);
}

Eigen::Vector3d plain_single_layer(const BoundaryGrid& grid, const Eigen::MatrixXd& f, const Eigen::Vector3d& x) {
  require_surface(grid);
  if (f.rows() != 3 || f.cols() != grid.size()) throw std::invalid_argument("plain_single_layer: density shape");
  require_well_separated(grid, x);
  Eigen::Vector3d out = Eigen::Vector3d::Zero();
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    out += f.col(i) * (grid.weights(i) / (x - grid.nodes.col(i).head<3>()).norm());
  }
  return out / (4.0 * kPi);
}

TraceIdentityReport trace_identity_check(const BoundaryGrid& grid, const LameParams& params, const Eigen::Vector3d& x) {
  require_surface(grid);
  const double lam = params.lambda;
  const double mu = params.mu;
  const double p_wave = 2.0 * mu + lam;
  const Eigen::Matrix3d I = Eigen::Matrix3d::Identity();

  Eigen::MatrixXd nu(3, grid.size());
  Eigen::MatrixXd nu_t(3, grid.size());
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    const Eigen::VectorXd n = grid.normals.col(i);
    nu.col(i) = conormal_linear(I, lam, mu, n);
    nu_t.col(i) = conormal_linear(I, params.lambda_t, params.mu_t, n);
  }
  const Eigen::Vector3d h = plain_single_layer(grid, grid.normals, x);

  // Magnitude of the plain-kernel terms, used to make residuals relative.
  Eigen::Vector3d mass = Eigen::Vector3d::Zero();
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    mass += grid.normals.col(i).head<3>().cwiseAbs() * (grid.weights(i) / (x - grid.nodes.col(i).head<3>()).norm());
  }
  mass /= 4.0 * kPi;

  const double c_matrix = -(2.0 * mu + 3.0 * lam) / p_wave;
  const double c_incl = -(2.0 * params.mu_t + 3.0 * params.lambda_t) / p_wave;

  auto finish = [&](const Eigen::Vector3d& lhs, double coef, double ref_coef) {
    IdentityResidual r;
    r.lhs = lhs;
    r.coefficient = coef;
    r.rhs = coef * h;
    const double s = std::max(std::abs(ref_coef), 1e-300);
    double worst = 0.0;
    for (int j = 0; j < 3; ++j) {
      worst = std::max(worst, std::abs(r.lhs(j) - r.rhs(j)) / (s * std::max(mass(j), 1e-300)));
    }
    r.residual = worst;
    return r;
  };

  TraceIdentityReport rep;
  rep.matrix_phase = finish(elastic_single_layer(grid, lam, mu, nu, x), c_matrix, c_matrix);
  rep.inclusion_phase = finish(elastic_single_layer(grid, lam, mu, nu_t, x), c_incl, c_incl);
  rep.difference = finish(elastic_single_layer(grid, lam, mu, nu_t - nu, x), c_incl - c_matrix,
                          std::max(std::abs(c_matrix), std::abs(c_incl)));
  return rep;
}

double kolosov(double lambda, double mu) {
  if (std::isinf(lambda)) return 1.0;
  if (lambda + mu == 0.0) throw DomainError("kolosov: lambda + mu must be nonzero");
  return (lambda + 3.0 * mu) / (lambda + mu);
}

}  // namespace inclab
