#include "inclab/newtonian.hpp"

#include "inclab/errors.hpp"
#include "inclab/quadrature.hpp"

#include <Eigen/Dense>
#include <Eigen/Geometry>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace inclab {

namespace {

constexpr double kPi = std::numbers::pi;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Radial antiderivatives F(R) = int_0^R G(rho) rho^(d-1) d rho.
double radial_2d(double r) {
  if (r <= 0.0) return 0.0;
  return (0.5 * r * r * std::log(r) - 0.25 * r * r) / (2.0 * kPi);
}

double radial_3d(double r) { return -r * r / (8.0 * kPi); }

// Distances along the ray x + rho * dir (rho > 0) at which it crosses the
// boundary, sorted ascending.
std::vector<double> ray_crossings_ellipse(const Ellipse& e, const Eigen::Vector2d& x, const Eigen::Vector2d& dir) {
  const Eigen::Matrix2d rt = Eigen::Rotation2Dd(e.rotation).toRotationMatrix().transpose();
  const Eigen::Vector2d p = rt * (x - e.center);
  const Eigen::Vector2d v = rt * dir;
  const double qa = v.x() * v.x() / (e.a * e.a) + v.y() * v.y() / (e.b * e.b);
  const double qb = 2.0 * (p.x() * v.x() / (e.a * e.a) + p.y() * v.y() / (e.b * e.b));
  const double qc = p.x() * p.x() / (e.a * e.a) + p.y() * p.y() / (e.b * e.b) - 1.0;
  const double disc = qb * qb - 4.0 * qa * qc;
  if (disc <= 0.0) return {};
  const double sq = std::sqrt(disc);
  std::vector<double> out;
  for (double rho : {(-qb - sq) / (2.0 * qa), (-qb + sq) / (2.0 * qa)}) {
    if (rho > 0.0) out.push_back(rho);
  }
  return out;
}

std::vector<double> ray_crossings_polygon(const Polygon& poly, const Eigen::Vector2d& x, const Eigen::Vector2d& dir) {
  std::vector<double> out;
  const auto& v = poly.vertices;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Eigen::Vector2d a = v[i];
    const Eigen::Vector2d e = v[(i + 1) % n] - a;
    // Solve x + rho dir = a + s e.
    const double det = dir.x() * (-e.y()) - dir.y() * (-e.x());
    if (std::abs(det) < 1e-300) continue;
    const Eigen::Vector2d rhs = a - x;
    const double rho = (rhs.x() * (-e.y()) - rhs.y() * (-e.x())) / det;
    const double s = (dir.x() * rhs.y() - dir.y() * rhs.x()) / det;
    if (rho > 0.0 && s >= 0.0 && s < 1.0) out.push_back(rho);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> ray_crossings_star(const FourierStar& star, const Eigen::Vector2d& x, const Eigen::Vector2d& dir) {
  // Roots of cross(gamma(t) - x, dir) = 0 with <gamma(t) - x, dir> > 0.
  auto point = [&](double t) { return Eigen::Vector2d(star.radius(t) * std::cos(t), star.radius(t) * std::sin(t)); };
  auto f = [&](double t) {
    const Eigen::Vector2d r = point(t) - x;
    return r.x() * dir.y() - r.y() * dir.x();
  };
  constexpr int kScan = 1024;
  std::vector<double> out;
  double t0 = 0.0;
  double f0 = f(t0);
  for (int i = 1; i <= kScan; ++i) {
    const double t1 = 2.0 * kPi * i / kScan;
    const double f1 = f(t1);
    if ((f0 <= 0.0 && f1 > 0.0) || (f0 >= 0.0 && f1 < 0.0)) {
      double lo = t0;
      double hi = t1;
      double flo = f0;
      for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((fm <= 0.0) == (flo <= 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      const Eigen::Vector2d r = point(0.5 * (lo + hi)) - x;
      if (r.dot(dir) > 0.0) out.push_back(r.norm());
    }
    t0 = t1;
    f0 = f1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

double alternating_sum(const std::vector<double>& crossings, double (*radial)(double)) {
  double s = 0.0;
  double sign = 1.0;
  for (double r : crossings) {
    s += sign * radial(r);
    sign = -sign;
  }
  return s;
}

double volume_route_2d(const ShapeSpec& shape, const Eigen::Vector2d& x, int angular_n) {
  auto crossings = [&](const Eigen::Vector2d& dir) {
    return std::visit(Overloaded{
                          [&](const Ellipse& e) { return ray_crossings_ellipse(e, x, dir); },
                          [&](const Polygon& p) { return ray_crossings_polygon(p, x, dir); },
                          [&](const FourierStar& s) { return ray_crossings_star(s, x, dir); },
                          [](const auto&) -> std::vector<double> { throw DomainError("not a 2D shape"); },
                      },
                      shape);
  };
  auto integrand = [&](double th) {
    return alternating_sum(crossings(Eigen::Vector2d(std::cos(th), std::sin(th))), radial_2d);
  };

  if (const auto* poly = std::get_if<Polygon>(&shape)) {
    // Piecewise smooth in angle: integrate between vertex directions.
    std::vector<double> cuts;
    for (const auto& v : poly->vertices) {
      double th = std::atan2(v.y() - x.y(), v.x() - x.x());
      if (th < 0.0) th += 2.0 * kPi;
      cuts.push_back(th);
    }
    cuts.push_back(0.0);
    cuts.push_back(2.0 * kPi);
    std::sort(cuts.begin(), cuts.end());
    const int order = angular_n > 0 ? angular_n : 48;
    const QuadratureRule gl = gauss_legendre(order);
    double s = 0.0;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      const double a = cuts[k];
      const double b = cuts[k + 1];
      if (b - a <= 0.0) continue;
      for (int q = 0; q < order; ++q) {
        s += 0.5 * (b - a) * gl.weights(q) * integrand(0.5 * (a + b) + 0.5 * (b - a) * gl.nodes(q));
      }
    }
    return s;
  }
  const int n = angular_n > 0 ? angular_n : 2048;
  double s = 0.0;
  for (int k = 0; k < n; ++k) s += integrand(2.0 * kPi * (k + 0.5) / n);
  return s * 2.0 * kPi / n;
}

double ray_exit_3d(const ShapeSpec& shape, const Eigen::Vector3d& x, const Eigen::Vector3d& dir) {
  return std::visit(Overloaded{
                        [&](const Ellipsoid& e) {
                          const Eigen::Vector3d inv(1.0 / (e.c1 * e.c1), 1.0 / (e.c2 * e.c2), 1.0 / (e.c3 * e.c3));
                          const double qa = (dir.array().square() * inv.array()).sum();
                          const double qb = 2.0 * (x.array() * dir.array() * inv.array()).sum();
                          const double qc = (x.array().square() * inv.array()).sum() - 1.0;
                          return (-qb + std::sqrt(qb * qb - 4.0 * qa * qc)) / (2.0 * qa);
                        },
                        [&](const Cuboid& c) {
                          const Eigen::Vector3d h(c.h1, c.h2, c.h3);
                          double t = std::numeric_limits<double>::infinity();
                          for (int k = 0; k < 3; ++k) {
                            if (dir(k) > 0.0) t = std::min(t, (h(k) - x(k)) / dir(k));
                            if (dir(k) < 0.0) t = std::min(t, (-h(k) - x(k)) / dir(k));
                          }
                          return t;
                        },
                        [](const auto&) -> double { throw DomainError("not a 3D shape"); },
                    },
                    shape);
}

bool inside_3d(const ShapeSpec& shape, const Eigen::Vector3d& x) {
  if (const auto* e = std::get_if<Ellipsoid>(&shape)) {
    return std::pow(x.x() / e->c1, 2) + std::pow(x.y() / e->c2, 2) + std::pow(x.z() / e->c3, 2) < 1.0;
  }
  const auto& c = std::get<Cuboid>(shape);
  return std::abs(x.x()) < c.h1 && std::abs(x.y()) < c.h2 && std::abs(x.z()) < c.h3;
}

double volume_route_3d(const ShapeSpec& shape, const Eigen::Vector3d& x, int angular_n) {
  if (!inside_3d(shape, x)) {
    throw DomainError("newtonian_potential_volume: 3D volume route needs an interior point");
  }
  const bool smooth = std::holds_alternative<Ellipsoid>(shape);
  const int np = angular_n > 0 ? angular_n : (smooth ? 96 : 1024);
  const int na = 2 * np;
  const QuadratureRule gl = gauss_legendre(np, 0.0, kPi);
  const double dphi = 2.0 * kPi / na;
  double s = 0.0;
  for (int i = 0; i < np; ++i) {
    const double st = std::sin(gl.nodes(i));
    const double ct = std::cos(gl.nodes(i));
    double ring = 0.0;
    for (int j = 0; j < na; ++j) {
      const double ph = dphi * (j + 0.5);
      const Eigen::Vector3d dir(st * std::cos(ph), st * std::sin(ph), ct);
      ring += radial_3d(ray_exit_3d(shape, x, dir));
    }
    s += ring * dphi * st * gl.weights(i);
  }
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------

double carlson_rd(double x, double y, double z) {
  if (x < 0.0 || y < 0.0 || z <= 0.0 || x + y == 0.0) {
    throw DomainError("carlson_rd: need x, y >= 0 with x + y > 0 and z > 0");
  }
  const double x0 = x;
  const double y0 = y;
  const double z0 = z;
  double a = (x + y + 3.0 * z) / 5.0;
  const double a0 = a;
  double q = std::pow(0.25 * 1e-16, -1.0 / 6.0) * std::max({std::abs(a - x), std::abs(a - y), std::abs(a - z)});
  double sum = 0.0;
  double fac = 1.0;
  double pow4 = 1.0;
  while (pow4 * q >= std::abs(a)) {
    const double sx = std::sqrt(x);
    const double sy = std::sqrt(y);
    const double sz = std::sqrt(z);
    const double lambda = sx * sy + sx * sz + sy * sz;
    sum += fac / (sz * (z + lambda));
    fac *= 0.25;
    x = 0.25 * (x + lambda);
    y = 0.25 * (y + lambda);
    z = 0.25 * (z + lambda);
    a = 0.25 * (a + lambda);
    pow4 *= 0.25;
  }
  const double X = (a0 - x0) * pow4 / a;
  const double Y = (a0 - y0) * pow4 / a;
  const double Z = -(X + Y) / 3.0;
  const double xy = X * Y;
  const double z2 = Z * Z;
  const double e2 = xy - 6.0 * z2;
  const double e3 = (3.0 * xy - 8.0 * z2) * Z;
  const double e4 = 3.0 * (xy - z2) * z2;
  const double e5 = xy * z2 * Z;
  const double series = 1.0 - 3.0 * e2 / 14.0 + e3 / 6.0 + 9.0 * e2 * e2 / 88.0 - 3.0 * e4 / 22.0 -
                        9.0 * e2 * e3 / 52.0 + 3.0 * e5 / 26.0;
  (void)z0;
  return pow4 * series / (a * std::sqrt(a)) + 3.0 * sum;
}

DepolarizationFactors depolarization_factors(const Ellipsoid& e) {
  validate(e);
  const double c[3] = {e.c1, e.c2, e.c3};
  const double prod = e.c1 * e.c2 * e.c3;
  DepolarizationFactors f;
  f.a.resize(3);
  for (int j = 0; j < 3; ++j) {
    const int k = (j + 1) % 3;
    const int l = (j + 2) % 3;
    f.a(j) = prod / 3.0 * carlson_rd(c[k] * c[k], c[l] * c[l], c[j] * c[j]);
  }
  return f;
}

DepolarizationFactors depolarization_factors_2d(const Ellipse& e) {
  validate(e);
  DepolarizationFactors f;
  f.a.resize(2);
  f.a << e.b / (e.a + e.b), e.a / (e.a + e.b);
  return f;
}

double newtonian_potential(const BoundaryGrid& grid, const Eigen::Ref<const Eigen::VectorXd>& x) {
  if (x.size() != grid.dim) throw std::invalid_argument("newtonian_potential: dimension mismatch");
  double s = 0.0;
  if (grid.dim == 2) {
    // log r = Delta_y [ r^2/4 (log r - 1) ].
    const Eigen::Vector2d p = x.head<2>();
    for (Eigen::Index i = 0; i < grid.size(); ++i) {
      const Eigen::Vector2d r = grid.nodes.col(i).head<2>() - p;
      const double r2 = r.squaredNorm();
      if (r2 == 0.0) continue;
      s += r.dot(grid.normals.col(i).head<2>()) * (0.25 * std::log(r2) - 0.25) * grid.weights(i);
    }
    return s / (2.0 * kPi);
  }
  // 1/r = Delta_y (r / 2).
  const Eigen::Vector3d p = x.head<3>();
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    const Eigen::Vector3d r = grid.nodes.col(i).head<3>() - p;
    const double d = r.norm();
    if (d == 0.0) continue;
    s += r.dot(grid.normals.col(i).head<3>()) / d * grid.weights(i);
  }
  return -s / (8.0 * kPi);
}

int newtonian_grid_resolution(const ShapeSpec& shape) {
  return std::visit(Overloaded{
                        [](const Ellipse&) { return 1024; },
                        [](const FourierStar&) { return 1024; },
                        [](const Polygon&) { return 128; },
                        [](const Ellipsoid&) { return 96; },
                        [](const Cuboid&) { return 64; },
                    },
                    shape);
}

double newtonian_potential(const ShapeSpec& shape, const Eigen::Ref<const Eigen::VectorXd>& x) {
  return newtonian_potential(discretize(shape, newtonian_grid_resolution(shape)), x);
}

double newtonian_potential_volume(const ShapeSpec& shape, const Eigen::Ref<const Eigen::VectorXd>& x, int angular_n) {
  validate(shape);
  if (x.size() != dimension(shape)) throw std::invalid_argument("newtonian_potential_volume: dimension mismatch");
  if (dimension(shape) == 2) return volume_route_2d(shape, x.head<2>(), angular_n);
  return volume_route_3d(shape, x.head<3>(), angular_n);
}

QuadraticFitReport quadratic_fit(const Eigen::MatrixXd& points, const Eigen::VectorXd& values) {
  const int d = static_cast<int>(points.rows());
  const Eigen::Index m = points.cols();
  const int quad_terms = d * (d + 1) / 2;
  const int unknowns = quad_terms + d + 1;
  if (m < 3 * unknowns) {
    throw FitError("quadratic_fit: need at least " + std::to_string(3 * unknowns) + " samples, got " +
                   std::to_string(m));
  }
  Eigen::MatrixXd design(m, unknowns);
  for (Eigen::Index s = 0; s < m; ++s) {
    int col = 0;
    for (int i = 0; i < d; ++i) {
      for (int j = i; j < d; ++j) design(s, col++) = points(i, s) * points(j, s);
    }
    for (int i = 0; i < d; ++i) design(s, col++) = points(i, s);
    design(s, col) = 1.0;
  }
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  if (qr.rank() < unknowns) throw FitError("quadratic_fit: sample is rank deficient");
  const Eigen::VectorXd coef = qr.solve(values);

  QuadraticFitReport rep;
  rep.samples = static_cast<int>(m);
  rep.A = Eigen::MatrixXd::Zero(d, d);
  int col = 0;
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      if (i == j) {
        rep.A(i, i) = coef(col);
      } else {
        rep.A(i, j) = rep.A(j, i) = 0.5 * coef(col);
      }
      ++col;
    }
  }
  rep.b = coef.segment(quad_terms, d);
  rep.C = coef(unknowns - 1);
  const Eigen::VectorXd resid = design * coef - values;
  rep.range = values.maxCoeff() - values.minCoeff();
  const double denom = rep.range > 0.0 ? rep.range : 1.0;
  rep.rms_residual = std::sqrt(resid.squaredNorm() / static_cast<double>(m)) / denom;
  rep.max_residual = resid.lpNorm<Eigen::Infinity>() / denom;
  return rep;
}

QuadraticFitReport quadratic_interior_fit(const ShapeSpec& shape, const InteriorSample& sample) {
  if (sample.points.rows() != dimension(shape)) throw FitError("quadratic_interior_fit: dimension mismatch");
  const BoundaryGrid grid = discretize(shape, newtonian_grid_resolution(shape));
  Eigen::VectorXd values(sample.size());
  for (Eigen::Index i = 0; i < sample.size(); ++i) values(i) = newtonian_potential(grid, sample.points.col(i));
  return quadratic_fit(sample.points, values);
}

}  // namespace inclab
