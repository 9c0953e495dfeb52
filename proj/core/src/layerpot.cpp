#include "inclab/layerpot.hpp"

#include "inclab/errors.hpp"
#include "inclab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

namespace inclab {

namespace {

constexpr double kPi = std::numbers::pi;

void require_density(const BoundaryGrid& grid, const Density& phi) {
  if (phi.size() != grid.size()) {
    throw std::invalid_argument("density length " + std::to_string(phi.size()) + " does not match node count " +
                                std::to_string(grid.size()));
  }
}

void require_point(const BoundaryGrid& grid, const Eigen::Ref<const Eigen::VectorXd>& x) {
  if (x.size() != grid.dim) {
    throw std::invalid_argument("point dimension " + std::to_string(x.size()) + " does not match grid dimension " +
                                std::to_string(grid.dim));
  }
}

}  // namespace

double laplace_green(int dim, const Eigen::Ref<const Eigen::VectorXd>& r) {
  const double d = r.norm();
  return dim == 2 ? std::log(d) / (2.0 * kPi) : -1.0 / (4.0 * kPi * d);
}

Eigen::VectorXd laplace_green_gradient(int dim, const Eigen::Ref<const Eigen::VectorXd>& r) {
  const double d2 = r.squaredNorm();
  return dim == 2 ? Eigen::VectorXd(r / (2.0 * kPi * d2)) : Eigen::VectorXd(r / (4.0 * kPi * d2 * std::sqrt(d2)));
}

void require_well_separated(const BoundaryGrid& grid, const Eigen::Ref<const Eigen::VectorXd>& x, double factor) {
  require_point(grid, x);
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    const double dist = (grid.nodes.col(i) - x).norm();
    if (dist < factor * grid.spacing(i)) {
      std::ostringstream os;
      os << "target lies " << dist << " from boundary node " << i << ", closer than " << factor
         << " x local spacing " << grid.spacing(i);
      throw NearBoundaryError(os.str());
    }
  }
}

double single_layer_eval(const BoundaryGrid& grid, const Density& phi, const Eigen::Ref<const Eigen::VectorXd>& x) {
  require_density(grid, phi);
  require_well_separated(grid, x);
  double s = 0.0;
  if (grid.dim == 2) {
    const Eigen::Vector2d p = x.head<2>();
    for (Eigen::Index i = 0; i < grid.size(); ++i) {
      const Eigen::Vector2d r = p - grid.nodes.col(i).head<2>();
      s += 0.5 * std::log(r.squaredNorm()) * phi(i) * grid.weights(i);
    }
    return s / (2.0 * kPi);
  }
  const Eigen::Vector3d p = x.head<3>();
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    const Eigen::Vector3d r = p - grid.nodes.col(i).head<3>();
    s += phi(i) * grid.weights(i) / r.norm();
  }
  return -s / (4.0 * kPi);
}

Eigen::VectorXd single_layer_gradient(const BoundaryGrid& grid, const Density& phi,
                                      const Eigen::Ref<const Eigen::VectorXd>& x) {
  require_density(grid, phi);
  require_well_separated(grid, x);
  if (grid.dim == 2) {
    const Eigen::Vector2d p = x.head<2>();
    Eigen::Vector2d g = Eigen::Vector2d::Zero();
    for (Eigen::Index i = 0; i < grid.size(); ++i) {
      const Eigen::Vector2d r = p - grid.nodes.col(i).head<2>();
      g += r * (phi(i) * grid.weights(i) / r.squaredNorm());
    }
    return g / (2.0 * kPi);
  }
  const Eigen::Vector3d p = x.head<3>();
  Eigen::Vector3d g = Eigen::Vector3d::Zero();
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    const Eigen::Vector3d r = p - grid.nodes.col(i).head<3>();
    const double d2 = r.squaredNorm();
    g += r * (phi(i) * grid.weights(i) / (d2 * std::sqrt(d2)));
  }
  return g / (4.0 * kPi);
}

NpoOperator npo_matrix(const BoundaryGrid& grid) {
  if (grid.dim != 2) throw DomainError("npo_matrix: only 2D grids are supported");
  const Eigen::Index n = grid.size();
  if (n < 16) throw ResolutionError("npo_matrix: need at least 16 nodes, got " + std::to_string(n));
  NpoOperator op;
  op.matrix.resize(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const Eigen::Vector2d y = grid.nodes.col(j);
    const double wj = grid.weights(j) / (2.0 * kPi);
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == j) continue;
      const Eigen::Vector2d r = grid.nodes.col(i).head<2>() - y;
      op.matrix(i, j) = r.dot(grid.normals.col(i).head<2>()) / r.squaredNorm() * wj;
    }
    // Smooth limit of the kernel on C^2 curves; on flat panels it vanishes.
    op.matrix(j, j) = grid.kind == GridKind::SmoothCurve ? grid.curvature(j) / (4.0 * kPi) * grid.weights(j) : 0.0;
  }
  return op;
}

// ---------------------------------------------------------------------------

TrigInterpolant::TrigInterpolant(const Eigen::VectorXd& samples) : n_(static_cast<int>(samples.size())) {
  if (n_ < 2) throw std::invalid_argument("TrigInterpolant: need at least two samples");
  const int kmax = (n_ - 1) / 2;
  cos_ = Eigen::VectorXd::Zero(kmax);
  sin_ = Eigen::VectorXd::Zero(kmax);
  mean_ = samples.mean();
  for (int k = 1; k <= kmax; ++k) {
    double a = 0.0;
    double b = 0.0;
    for (int j = 0; j < n_; ++j) {
      const double t = 2.0 * kPi * static_cast<double>((static_cast<long long>(k) * j) % n_) / n_;
      a += samples(j) * std::cos(t);
      b += samples(j) * std::sin(t);
    }
    cos_(k - 1) = 2.0 * a / n_;
    sin_(k - 1) = 2.0 * b / n_;
  }
  if (n_ % 2 == 0) {
    double s = 0.0;
    for (int j = 0; j < n_; ++j) s += (j % 2 == 0 ? 1.0 : -1.0) * samples(j);
    nyquist_ = s / n_;
  }
}

double TrigInterpolant::operator()(double t) const {
  const std::complex<double> step = std::polar(1.0, t);
  std::complex<double> e = step;
  double s = mean_;
  for (Eigen::Index k = 0; k < cos_.size(); ++k) {
    s += cos_(k) * e.real() + sin_(k) * e.imag();
    e *= step;
  }
  if (n_ % 2 == 0) s += nyquist_ * std::cos(0.5 * n_ * t);
  return s;
}

Density one_sided_normal_derivative(const BoundaryGrid& grid, const Density& phi, Side side, double offset) {
  require_density(grid, phi);
  if (grid.kind != GridKind::SmoothCurve || !grid.curve) {
    throw DomainError("one_sided_normal_derivative: requires a smooth 2D curve grid");
  }
  const TrigInterpolant density(phi);
  const double sign = side == Side::Exterior ? 1.0 : -1.0;
  const double h = offset * grid.scale;
  const QuadratureRule gl = gauss_legendre(20);

  // Panels in the parameter graded geometrically toward t_i, the foot of the
  // probe, starting at the parameter width of the probe distance.
  auto probe = [&](Eigen::Index i, double dist) {
    const Eigen::Vector2d ni = grid.normals.col(i);
    const Eigen::Vector2d x = grid.nodes.col(i).head<2>() + sign * dist * ni;
    const double ti = grid.params(i);
    auto integrand = [&](double t) {
      const CurveSample s = grid.curve(t);
      const Eigen::Vector2d r = x - s.point;
      return r.dot(ni) / r.squaredNorm() * density(t) * s.d1.norm();
    };
    auto panel = [&](double a, double b) {
      double acc = 0.0;
      for (Eigen::Index q = 0; q < gl.nodes.size(); ++q) {
        acc += gl.weights(q) * integrand(0.5 * (a + b) + 0.5 * (b - a) * gl.nodes(q));
      }
      return 0.5 * (b - a) * acc;
    };
    double total = 0.0;
    double lo = 0.0;
    double hi = std::min(dist / grid.speed(i), kPi);
    while (lo < kPi) {
      total += panel(ti + lo, ti + hi) + panel(ti - hi, ti - lo);
      lo = hi;
      hi = std::min(2.0 * hi, kPi);
    }
    return total / (2.0 * kPi);
  };

  Density out(grid.size());
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    out(i) = 2.0 * probe(i, h) - probe(i, 2.0 * h);
  }
  return out;
}

double jump_check(const BoundaryGrid& grid, const Density& phi) {
  const NpoOperator kstar = npo_matrix(grid);
  const Density kphi = kstar.apply(phi);
  const Density interior = one_sided_normal_derivative(grid, phi, Side::Interior);
  const Density exterior = one_sided_normal_derivative(grid, phi, Side::Exterior);
  const Density ref_in = -0.5 * phi + kphi;
  const Density ref_out = 0.5 * phi + kphi;
  const double scale = std::max({ref_in.lpNorm<Eigen::Infinity>(), ref_out.lpNorm<Eigen::Infinity>(), 1e-300});
  const double err = std::max((interior - ref_in).lpNorm<Eigen::Infinity>(),
                              (exterior - ref_out).lpNorm<Eigen::Infinity>());
  return err / scale;
}

double green_identity_check(const BoundaryGrid& grid, const Eigen::Ref<const Eigen::VectorXd>& x) {
  if (grid.dim != 3) throw DomainError("green_identity_check: requires a 3D grid");
  require_well_separated(grid, x);
  const Eigen::Vector3d p = x.head<3>();
  Eigen::Vector3d dipole = Eigen::Vector3d::Zero();
  Eigen::Vector3d plain = Eigen::Vector3d::Zero();
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    const Eigen::Vector3d r = p - grid.nodes.col(i).head<3>();
    const Eigen::Vector3d n = grid.normals.col(i).head<3>();
    const double d = r.norm();
    const double w = grid.weights(i);
    dipole += r * (r.dot(n) / (d * d * d) * w);
    plain += n * (w / d);
  }
  return (dipole + plain).lpNorm<Eigen::Infinity>();
}

}  // namespace inclab
