#include "oracles.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>

namespace inclab::oracle {

double ellipse_perimeter(double a, double b) {
  auto speed = [&](double t) { return std::hypot(a * std::sin(t), b * std::cos(t)); };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(speed, 0.0, 2.0 * std::numbers::pi, 30,
                                                                         1e-15);
}

double depolarization_quadrature(double c1, double c2, double c3, int j) {
  const double c[3] = {c1, c2, c3};
  auto f = [&](double s) {
    return 1.0 / ((c[j] * c[j] + s) * std::sqrt((c1 * c1 + s) * (c2 * c2 + s) * (c3 * c3 + s)));
  };
  boost::math::quadrature::exp_sinh<double> integrator;
  return 0.5 * c1 * c2 * c3 * integrator.integrate(f, 1e-15);
}

double ellipse_factor(double a, double b, int j) { return j == 0 ? b / (a + b) : a / (a + b); }

double ellipse_slope(double a, double b, double k, int j) {
  return 1.0 / (1.0 + (k - 1.0) * ellipse_factor(a, b, j));
}

double ellipse_pt_entry(double a, double b, double k, int j) {
  return std::numbers::pi * a * b * (k - 1.0) / (1.0 + (k - 1.0) * ellipse_factor(a, b, j));
}

double ball_newtonian(double r) { return r * r / 6.0 - 0.5; }

double disk_newtonian(double r) { return 0.25 * r * r - 0.25; }

double box_corner_potential(double a, double b, double c) {
  const double d = std::sqrt(a * a + b * b + c * c);
  return b * c * std::log((a + d) / std::hypot(b, c)) + a * c * std::log((b + d) / std::hypot(a, c)) +
         a * b * std::log((c + d) / std::hypot(a, b)) - 0.5 * a * a * std::atan(b * c / (a * d)) -
         0.5 * b * b * std::atan(a * c / (b * d)) - 0.5 * c * c * std::atan(a * b / (c * d));
}

double cube_newtonian(double h, double x, double y, double z) {
  double s = 0.0;
  for (double ex : {h - x, h + x}) {
    for (double ey : {h - y, h + y}) {
      for (double ez : {h - z, h + z}) s += box_corner_potential(ex, ey, ez);
    }
  }
  return -s / (4.0 * std::numbers::pi);
}

double circle_mode_inner(int m) { return m == 0 ? 0.0 : -0.5; }

double circle_mode_outer(int m) { return m == 0 ? 1.0 : 0.5; }

double kelvin_sphere_average(double lambda, double mu) {
  const double alpha1 = 0.5 * (1.0 / mu + 1.0 / (2.0 * mu + lambda));
  const double alpha2 = 0.5 * (1.0 / mu - 1.0 / (2.0 * mu + lambda));
  return -(alpha1 + alpha2 / 3.0);
}

}  // namespace inclab::oracle
