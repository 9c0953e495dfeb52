#include "inclab/hodograph.hpp"

#include "inclab/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace inclab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

}  // namespace

Complex koebe(Complex z) {
  if (std::abs(z) < 1.0 - 4.0 * kEps) throw DomainError("koebe: requires |z| >= 1");
  return 0.5 * (z - 1.0 / z);
}

ExteriorMap ellipse_exterior_map(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw InvalidShapeError("ellipse_exterior_map: semi-axes must be positive");
  return {Complex(0.5 * (a + b), 0.0), Complex(0.0, 0.0), Complex(0.5 * (a - b), 0.0)};
}

Complex invert_exterior_map(const ExteriorMap& F, Complex w, Closure closure) {
  const Complex B = -(w - F.C);
  const Complex disc = std::sqrt(B * B - 4.0 * F.gamma * F.beta);
  const Complex q = -0.5 * (std::real(std::conj(B) * disc) >= 0.0 ? B + disc : B - disc);
  Complex z = q / F.gamma;
  if (q != Complex(0.0, 0.0)) {
    const Complex other = F.beta / q;
    if (std::abs(other) > std::abs(z)) z = other;
  }
  // One Newton step on F(z) = w.
  const Complex dF = F.derivative(z);
  if (std::abs(dF) > 0.0) z -= (F(z) - w) / dF;

  const double r = std::abs(z);
  const bool inside = closure == Closure::Open ? r <= 1.0 + 8.0 * kEps : r < 1.0 - 1e-9;
  if (inside) throw DomainError("invert_exterior_map: w is not outside the boundary image");
  return z;
}

Complex hodograph_map(double a, double b, Complex w) {
  const ExteriorMap F = ellipse_exterior_map(a, b);
  Complex z = invert_exterior_map(F, w, Closure::Closed);
  if (std::abs(z) < 1.0) z /= std::abs(z);
  return b * koebe(z);
}

double hodograph_leading_coefficient(double a, double b) { return b / (a + b); }

Complex asymptotic_coefficient(const ComplexMap& f, const std::vector<double>& radii) {
  if (radii.size() < 3) throw std::invalid_argument("asymptotic_coefficient: need at least three radii");
  const auto m = static_cast<Eigen::Index>(radii.size());
  Eigen::MatrixXcd design(m, 3);
  Eigen::VectorXcd rhs(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const double w = radii[static_cast<std::size_t>(i)];
    design(i, 0) = 1.0;
    design(i, 1) = 1.0 / w;
    design(i, 2) = 1.0 / (w * w);
    rhs(i) = f(Complex(w, 0.0)) / w;
  }
  return design.colPivHouseholderQr().solve(rhs)(0);
}

UnivalenceReport univalence_check(const ComplexMap& f, const std::optional<ExteriorMap>& F,
                                  const UnivalenceOptions& opts) {
  auto domain = [&](Complex z) { return F ? (*F)(z) : z; };
  UnivalenceReport rep;

  // Boundary image.
  std::vector<Complex> boundary(static_cast<std::size_t>(opts.angles));
  for (int j = 0; j < opts.angles; ++j) {
    boundary[static_cast<std::size_t>(j)] = f(domain(std::polar(1.0, 2.0 * kPi * j / opts.angles)));
  }
  rep.slit_lo = std::numeric_limits<double>::infinity();
  rep.slit_hi = -std::numeric_limits<double>::infinity();
  for (const Complex& v : boundary) {
    rep.slit_lo = std::min(rep.slit_lo, v.imag());
    rep.slit_hi = std::max(rep.slit_hi, v.imag());
    rep.max_boundary_real = std::max(rep.max_boundary_real, std::abs(v.real()));
  }
  const Complex centre(0.0, 0.5 * (rep.slit_lo + rep.slit_hi));

  rep.min_abs_derivative = std::numeric_limits<double>::infinity();
  rep.min_winding = std::numeric_limits<int>::max();
  rep.max_winding = std::numeric_limits<int>::min();
  const double ratio = std::log(opts.r_max / opts.r_min) / std::max(opts.radii - 1, 1);
  for (int i = 0; i < opts.radii; ++i) {
    const double r = opts.r_min * std::exp(ratio * i);
    double turned = 0.0;
    Complex prev;
    for (int j = 0; j <= opts.angles; ++j) {
      const Complex w = domain(std::polar(r, 2.0 * kPi * j / opts.angles));
      const Complex v = f(w);
      if (j > 0) turned += std::arg((v - centre) / (prev - centre));
      prev = v;
      if (j == opts.angles) break;

      const double h = 1e-6 * std::max(std::abs(w), 1.0);
      const Complex dx = (f(w + h) - f(w - h)) / (2.0 * h);
      const Complex dy = (f(w + Complex(0.0, h)) - f(w - Complex(0.0, h))) / Complex(0.0, 2.0 * h);
      rep.min_abs_derivative = std::min(rep.min_abs_derivative, std::abs(dx));
      if (std::abs(dx) > 0.0) {
        rep.cauchy_riemann_residual = std::max(rep.cauchy_riemann_residual, std::abs(dx - dy) / std::abs(dx));
      }
    }
    const int winding = static_cast<int>(std::lround(turned / (2.0 * kPi)));
    rep.min_winding = std::min(rep.min_winding, winding);
    rep.max_winding = std::max(rep.max_winding, winding);
  }
  rep.pass = rep.min_abs_derivative > 0.0 && rep.max_boundary_real <= opts.boundary_tol &&
             rep.cauchy_riemann_residual <= opts.cr_tol && rep.min_winding == 1 && rep.max_winding == 1;
  return rep;
}

}  // namespace inclab
