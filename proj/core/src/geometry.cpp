#include "inclab/geometry.hpp"

#include "inclab/errors.hpp"
#include "inclab/quadrature.hpp"

#include <Eigen/Geometry>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace inclab {

namespace {

constexpr double kPi = std::numbers::pi;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double cross2(const Eigen::Vector2d& u, const Eigen::Vector2d& v) {
  return u.x() * v.y() - u.y() * v.x();
}

double signed_area(const std::vector<Eigen::Vector2d>& v) {
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    s += cross2(v[i], v[(i + 1) % v.size()]);
  }
  return 0.5 * s;
}

bool segments_intersect(const Eigen::Vector2d& p1, const Eigen::Vector2d& p2,
                        const Eigen::Vector2d& q1, const Eigen::Vector2d& q2) {
  auto orient = [](const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c) {
    const double v = cross2(b - a, c - a);
    return (v > 0) - (v < 0);
  };
  auto on_segment = [](const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c) {
    return std::min(a.x(), b.x()) <= c.x() && c.x() <= std::max(a.x(), b.x()) &&
           std::min(a.y(), b.y()) <= c.y() && c.y() <= std::max(a.y(), b.y());
  };
  const int o1 = orient(p1, p2, q1);
  const int o2 = orient(p1, p2, q2);
  const int o3 = orient(q1, q2, p1);
  const int o4 = orient(q1, q2, p2);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(p1, p2, q1)) return true;
  if (o2 == 0 && on_segment(p1, p2, q2)) return true;
  if (o3 == 0 && on_segment(q1, q2, p1)) return true;
  if (o4 == 0 && on_segment(q1, q2, p2)) return true;
  return false;
}

void validate_polygon(const Polygon& p) {
  const auto& v = p.vertices;
  if (v.size() < 3) throw InvalidShapeError("polygon needs at least 3 vertices");
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    if ((v[(i + 1) % n] - v[i]).norm() == 0.0) {
      throw InvalidShapeError("polygon has a repeated vertex");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (segments_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n])) {
        throw InvalidShapeError("polygon is not simple (edges " + std::to_string(i) + " and " +
                                std::to_string(j) + " intersect)");
      }
    }
  }
  if (signed_area(v) <= 0.0) {
    throw InvalidShapeError("polygon vertices must be counterclockwise");
  }
}

void validate_star(const FourierStar& s) {
  if (!(s.r0 > 0.0) || !std::isfinite(s.r0)) {
    throw InvalidShapeError("fourier star: r0 must be positive");
  }
  for (const auto& mode : s.modes) {
    if (mode.m < 2) throw InvalidShapeError("fourier star: mode index must be >= 2");
    if (!std::isfinite(mode.cos_coeff) || !std::isfinite(mode.sin_coeff)) {
      throw InvalidShapeError("fourier star: non-finite coefficient");
    }
  }
  constexpr int kSamples = 4096;
  for (int i = 0; i < kSamples; ++i) {
    const double t = 2.0 * kPi * i / kSamples;
    if (s.radius(t) <= 0.0) {
      throw InvalidShapeError("fourier star: radius r(theta) <= 0 at theta = " + std::to_string(t));
    }
  }
}

CurveMap ellipse_curve(const Ellipse& e) {
  const Eigen::Rotation2Dd rot(e.rotation);
  const Eigen::Matrix2d r = rot.toRotationMatrix();
  return [a = e.a, b = e.b, c = e.center, r](double t) {
    const double ct = std::cos(t);
    const double st = std::sin(t);
    CurveSample s;
    s.point = c + r * Eigen::Vector2d(a * ct, b * st);
    s.d1 = r * Eigen::Vector2d(-a * st, b * ct);
    s.d2 = r * Eigen::Vector2d(-a * ct, -b * st);
    return s;
  };
}

CurveMap star_curve(const FourierStar& star) {
  return [star](double t) {
    const double r = star.radius(t);
    const double r1 = star.radius_d1(t);
    const double r2 = star.radius_d2(t);
    const double ct = std::cos(t);
    const double st = std::sin(t);
    CurveSample s;
    s.point = Eigen::Vector2d(r * ct, r * st);
    s.d1 = Eigen::Vector2d(r1 * ct - r * st, r1 * st + r * ct);
    s.d2 = Eigen::Vector2d(r2 * ct - 2.0 * r1 * st - r * ct, r2 * st + 2.0 * r1 * ct - r * st);
    return s;
  };
}

void finish_grid(BoundaryGrid& g) {
  const Eigen::VectorXd c = g.centroid();
  double s = 0.0;
  for (Eigen::Index i = 0; i < g.size(); ++i) s = std::max(s, (g.nodes.col(i) - c).norm());
  g.scale = s;
}

BoundaryGrid discretize_smooth(const CurveMap& curve, int n) {
  BoundaryGrid g;
  g.dim = 2;
  g.kind = GridKind::SmoothCurve;
  g.nodes.resize(2, n);
  g.normals.resize(2, n);
  g.weights.resize(n);
  g.spacing.resize(n);
  g.params.resize(n);
  g.speed.resize(n);
  g.curvature.resize(n);
  const double dt = 2.0 * kPi / n;
  for (int j = 0; j < n; ++j) {
    const double t = dt * j;
    const CurveSample s = curve(t);
    const double speed = s.d1.norm();
    g.params(j) = t;
    g.speed(j) = speed;
    g.nodes.col(j) = s.point;
    g.normals.col(j) = Eigen::Vector2d(s.d1.y(), -s.d1.x()) / speed;
    g.weights(j) = dt * speed;
    g.spacing(j) = dt * speed;
    g.curvature(j) = cross2(s.d1, s.d2) / (speed * speed * speed);
  }
  g.curve = curve;
  finish_grid(g);
  return g;
}

// Panel breakpoints on [0, 1] for one polygon edge: `base` equal panels with
// the two end panels refined dyadically toward the corners.
std::vector<double> graded_breakpoints(int base, int depth) {
  std::vector<double> cuts;
  auto grade_toward_start = [&](double a, double b) {
    // [a, b] refined toward a.
    const double len = b - a;
    cuts.push_back(a);
    for (int level = depth; level >= 1; --level) cuts.push_back(a + len * std::ldexp(1.0, -level));
  };
  auto grade_toward_end = [&](double a, double b) {
    const double len = b - a;
    cuts.push_back(a);
    for (int level = 1; level <= depth; ++level) cuts.push_back(b - len * std::ldexp(1.0, -level));
  };
  if (base == 1) {
    grade_toward_start(0.0, 0.5);
    grade_toward_end(0.5, 1.0);
  } else {
    const double h = 1.0 / base;
    grade_toward_start(0.0, h);
    for (int p = 1; p < base - 1; ++p) cuts.push_back(p * h);
    grade_toward_end(1.0 - h, 1.0);
  }
  cuts.push_back(1.0);
  return cuts;
}

BoundaryGrid discretize_polygon(const Polygon& poly, int n) {
  constexpr int kOrder = 16;
  const int base = std::max(1, n / kOrder);
  const std::vector<double> cuts = graded_breakpoints(base, kCornerRefinementDepth);
  const QuadratureRule gl = gauss_legendre(kOrder);
  const auto& v = poly.vertices;
  const std::size_t edges = v.size();
  const Eigen::Index per_edge = static_cast<Eigen::Index>(cuts.size() - 1) * kOrder;

  BoundaryGrid g;
  g.dim = 2;
  g.kind = GridKind::PanelCurve;
  const Eigen::Index total = per_edge * static_cast<Eigen::Index>(edges);
  g.nodes.resize(2, total);
  g.normals.resize(2, total);
  g.weights.resize(total);
  g.spacing.resize(total);
  Eigen::Index idx = 0;
  for (std::size_t e = 0; e < edges; ++e) {
    const Eigen::Vector2d p0 = v[e];
    const Eigen::Vector2d p1 = v[(e + 1) % edges];
    const Eigen::Vector2d d = p1 - p0;
    const double len = d.norm();
    const Eigen::Vector2d nrm = Eigen::Vector2d(d.y(), -d.x()) / len;
    for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
      const double a = cuts[p];
      const double b = cuts[p + 1];
      for (int q = 0; q < kOrder; ++q) {
        const double s = 0.5 * (a + b) + 0.5 * (b - a) * gl.nodes(q);
        g.nodes.col(idx) = p0 + s * d;
        g.normals.col(idx) = nrm;
        g.weights(idx) = 0.5 * (b - a) * gl.weights(q) * len;
        g.spacing(idx) = 0.5 * (b - a) * len * kPi / kOrder;
        ++idx;
      }
    }
  }
  finish_grid(g);
  return g;
}

// One face of a cuboid, tensor Gauss-Legendre panels.
void append_face(BoundaryGrid& g, Eigen::Index& idx, int axis, double sign, const Eigen::Vector3d& h,
                 const QuadratureRule& rule1d) {
  const int u = (axis + 1) % 3;
  const int w = (axis + 2) % 3;
  const Eigen::Index m = rule1d.nodes.size();
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      Eigen::Vector3d y;
      y(axis) = sign * h(axis);
      y(u) = h(u) * rule1d.nodes(i);
      y(w) = h(w) * rule1d.nodes(j);
      Eigen::Vector3d nrm = Eigen::Vector3d::Zero();
      nrm(axis) = sign;
      const double wt = h(u) * rule1d.weights(i) * h(w) * rule1d.weights(j);
      g.nodes.col(idx) = y;
      g.normals.col(idx) = nrm;
      g.weights(idx) = wt;
      g.spacing(idx) = std::sqrt(wt);
      ++idx;
    }
  }
}

BoundaryGrid discretize_cuboid(const Cuboid& c, int n) {
  constexpr int kOrder = 16;
  const int panels = std::max(1, n / kOrder);
  // Composite rule on [-1, 1].
  QuadratureRule rule{Eigen::VectorXd(panels * kOrder), Eigen::VectorXd(panels * kOrder)};
  for (int p = 0; p < panels; ++p) {
    const double a = -1.0 + 2.0 * p / panels;
    const double b = -1.0 + 2.0 * (p + 1) / panels;
    const QuadratureRule r = gauss_legendre(kOrder, a, b);
    rule.nodes.segment(p * kOrder, kOrder) = r.nodes;
    rule.weights.segment(p * kOrder, kOrder) = r.weights;
  }
  const Eigen::Index m = rule.nodes.size();
  BoundaryGrid g;
  g.dim = 3;
  g.kind = GridKind::Surface;
  const Eigen::Index total = 6 * m * m;
  g.nodes.resize(3, total);
  g.normals.resize(3, total);
  g.weights.resize(total);
  g.spacing.resize(total);
  const Eigen::Vector3d h(c.h1, c.h2, c.h3);
  Eigen::Index idx = 0;
  for (int axis = 0; axis < 3; ++axis) {
    append_face(g, idx, axis, +1.0, h, rule);
    append_face(g, idx, axis, -1.0, h, rule);
  }
  finish_grid(g);
  return g;
}

double point_segment_distance(const Eigen::Vector2d& x, const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  const Eigen::Vector2d d = b - a;
  const double len2 = d.squaredNorm();
  double t = len2 > 0.0 ? (x - a).dot(d) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return (x - (a + t * d)).norm();
}

// Distance used for margin verification. For curves, the closed polyline
// through the ordered nodes; for surfaces, the nearest node.
double verification_distance(const BoundaryGrid& g, const Eigen::Ref<const Eigen::VectorXd>& x) {
  if (g.dim == 3) return node_distance(g, x);
  const Eigen::Vector2d p = x.head<2>();
  double best = std::numeric_limits<double>::infinity();
  const Eigen::Index n = g.size();
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Vector2d a = g.nodes.col(i);
    const Eigen::Vector2d b = g.nodes.col((i + 1) % n);
    best = std::min(best, point_segment_distance(p, a, b));
  }
  return std::min(best, node_distance(g, x));
}

int fine_resolution(const ShapeSpec& shape) {
  return std::visit(Overloaded{
                        [](const Ellipse&) { return 4096; },
                        [](const FourierStar&) { return 4096; },
                        [](const Polygon&) { return 64; },
                        [](const Ellipsoid&) { return 128; },
                        [](const Cuboid&) { return 64; },
                    },
                    shape);
}

}  // namespace

// ---------------------------------------------------------------------------

double FourierStar::radius(double t) const {
  double s = 1.0;
  for (const auto& m : modes) s += m.cos_coeff * std::cos(m.m * t) + m.sin_coeff * std::sin(m.m * t);
  return r0 * s;
}

double FourierStar::radius_d1(double t) const {
  double s = 0.0;
  for (const auto& m : modes) s += m.m * (-m.cos_coeff * std::sin(m.m * t) + m.sin_coeff * std::cos(m.m * t));
  return r0 * s;
}

double FourierStar::radius_d2(double t) const {
  double s = 0.0;
  for (const auto& m : modes) {
    s -= m.m * m.m * (m.cos_coeff * std::cos(m.m * t) + m.sin_coeff * std::sin(m.m * t));
  }
  return r0 * s;
}

int dimension(const ShapeSpec& shape) {
  return std::visit(Overloaded{
                        [](const Ellipse&) { return 2; },
                        [](const Polygon&) { return 2; },
                        [](const FourierStar&) { return 2; },
                        [](const Ellipsoid&) { return 3; },
                        [](const Cuboid&) { return 3; },
                    },
                    shape);
}

void validate(const ShapeSpec& shape) {
  std::visit(Overloaded{
                 [](const Ellipse& e) {
                   if (!(e.a > 0.0) || !(e.b > 0.0) || !std::isfinite(e.a) || !std::isfinite(e.b)) {
                     throw InvalidShapeError("ellipse semi-axes must be positive");
                   }
                 },
                 [](const Polygon& p) { validate_polygon(p); },
                 [](const FourierStar& s) { validate_star(s); },
                 [](const Ellipsoid& e) {
                   if (!(e.c1 > 0.0) || !(e.c2 > 0.0) || !(e.c3 > 0.0)) {
                     throw InvalidShapeError("ellipsoid semi-axes must be positive");
                   }
                 },
                 [](const Cuboid& c) {
                   if (!(c.h1 > 0.0) || !(c.h2 > 0.0) || !(c.h3 > 0.0)) {
                     throw InvalidShapeError("cuboid half-widths must be positive");
                   }
                 },
             },
             shape);
}

std::string describe(const ShapeSpec& shape) {
  std::ostringstream os;
  os.precision(17);
  std::visit(Overloaded{
                 [&](const Ellipse& e) {
                   os << "ellipse(" << e.a << "," << e.b;
                   if (e.center.squaredNorm() > 0.0 || e.rotation != 0.0) {
                     os << ";center=" << e.center.x() << "," << e.center.y() << ";rotation=" << e.rotation;
                   }
                   os << ")";
                 },
                 [&](const Polygon& p) { os << "polygon(" << p.vertices.size() << " vertices)"; },
                 [&](const FourierStar& s) {
                   os << "star(" << s.r0;
                   for (const auto& m : s.modes) os << ";" << m.m << ":" << m.cos_coeff << "," << m.sin_coeff;
                   os << ")";
                 },
                 [&](const Ellipsoid& e) { os << "ellipsoid(" << e.c1 << "," << e.c2 << "," << e.c3 << ")"; },
                 [&](const Cuboid& c) { os << "cuboid(" << c.h1 << "," << c.h2 << "," << c.h3 << ")"; },
             },
             shape);
  return os.str();
}

double measure(const ShapeSpec& shape) {
  validate(shape);
  return std::visit(Overloaded{
                        [](const Ellipse& e) { return kPi * e.a * e.b; },
                        [](const Polygon& p) { return signed_area(p.vertices); },
                        [](const FourierStar& s) {
                          constexpr int kN = 4096;
                          double sum = 0.0;
                          for (int i = 0; i < kN; ++i) {
                            const double r = s.radius(2.0 * kPi * i / kN);
                            sum += r * r;
                          }
                          return 0.5 * sum * (2.0 * kPi / kN);
                        },
                        [](const Ellipsoid& e) { return 4.0 / 3.0 * kPi * e.c1 * e.c2 * e.c3; },
                        [](const Cuboid& c) { return 8.0 * c.h1 * c.h2 * c.h3; },
                    },
                    shape);
}

ShapeSpec make_disk(double radius) { return Ellipse{radius, radius, Eigen::Vector2d::Zero(), 0.0}; }

ShapeSpec make_unit_square() {
  return Polygon{{Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 0), Eigen::Vector2d(1, 1), Eigen::Vector2d(0, 1)}};
}

ShapeSpec make_kite() {
  return Polygon{{Eigen::Vector2d(0.0, -1.2), Eigen::Vector2d(0.6, 0.0), Eigen::Vector2d(0.0, 0.6),
                  Eigen::Vector2d(-0.6, 0.0)}};
}

ShapeSpec make_unit_cube() { return Cuboid{0.5, 0.5, 0.5}; }

// ---------------------------------------------------------------------------

double BoundaryGrid::enclosed_measure() const {
  double s = 0.0;
  for (Eigen::Index i = 0; i < size(); ++i) s += nodes.col(i).dot(normals.col(i)) * weights(i);
  return s / dim;
}

Eigen::VectorXd BoundaryGrid::centroid() const {
  return (nodes * weights) / weights.sum();
}

BoundaryGrid discretize(const ShapeSpec& shape, int n) {
  if (n < 16) throw ResolutionError("discretize: node count must be >= 16, got " + std::to_string(n));
  validate(shape);
  return std::visit(Overloaded{
                        [n](const Ellipse& e) { return discretize_smooth(ellipse_curve(e), n); },
                        [n](const FourierStar& s) { return discretize_smooth(star_curve(s), n); },
                        [n](const Polygon& p) { return discretize_polygon(p, n); },
                        [n](const Ellipsoid& e) { return discretize_ellipsoid(e, n, 2 * n); },
                        [n](const Cuboid& c) { return discretize_cuboid(c, n); },
                    },
                    shape);
}

int default_resolution(const ShapeSpec& shape) {
  return std::visit(Overloaded{
                        [](const Ellipse&) { return 256; },
                        [](const FourierStar&) { return 256; },
                        [](const Polygon&) { return 64; },
                        [](const Ellipsoid&) { return 64; },
                        [](const Cuboid&) { return 32; },
                    },
                    shape);
}

BoundaryGrid discretize_ellipsoid(const Ellipsoid& e, int n_polar, int n_azimuth) {
  validate(e);
  if (n_polar < 4 || n_azimuth < 8) throw ResolutionError("discretize_ellipsoid: grid too coarse");
  const QuadratureRule gl = gauss_legendre(n_polar, 0.0, kPi);
  BoundaryGrid g;
  g.dim = 3;
  g.kind = GridKind::Surface;
  const Eigen::Index total = static_cast<Eigen::Index>(n_polar) * n_azimuth;
  g.nodes.resize(3, total);
  g.normals.resize(3, total);
  g.weights.resize(total);
  g.spacing.resize(total);
  const double dphi = 2.0 * kPi / n_azimuth;
  Eigen::Index idx = 0;
  for (int i = 0; i < n_polar; ++i) {
    const double th = gl.nodes(i);
    const double st = std::sin(th);
    const double ct = std::cos(th);
    for (int j = 0; j < n_azimuth; ++j) {
      const double ph = dphi * j;
      const double sp = std::sin(ph);
      const double cp = std::cos(ph);
      const Eigen::Vector3d y(e.c1 * st * cp, e.c2 * st * sp, e.c3 * ct);
      const Eigen::Vector3d dth(e.c1 * ct * cp, e.c2 * ct * sp, -e.c3 * st);
      const Eigen::Vector3d dph(-e.c1 * st * sp, e.c2 * st * cp, 0.0);
      const double area = dth.cross(dph).norm();
      const Eigen::Vector3d grad(y.x() / (e.c1 * e.c1), y.y() / (e.c2 * e.c2), y.z() / (e.c3 * e.c3));
      g.nodes.col(idx) = y;
      g.normals.col(idx) = grad.normalized();
      g.weights(idx) = gl.weights(i) * dphi * area;
      g.spacing(idx) = std::max(dth.norm() * gl.weights(i), dph.norm() * dphi);
      ++idx;
    }
  }
  finish_grid(g);
  return g;
}

// ---------------------------------------------------------------------------

double winding_indicator(const BoundaryGrid& grid, const Eigen::Ref<const Eigen::VectorXd>& x) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    const Eigen::VectorXd r = grid.nodes.col(i) - x;
    const double r2 = r.squaredNorm();
    const double denom = grid.dim == 2 ? r2 : r2 * std::sqrt(r2);
    s += r.dot(grid.normals.col(i)) / denom * grid.weights(i);
  }
  return s / (grid.dim == 2 ? 2.0 * kPi : 4.0 * kPi);
}

double node_distance(const BoundaryGrid& grid, const Eigen::Ref<const Eigen::VectorXd>& x) {
  return std::sqrt((grid.nodes.colwise() - x).colwise().squaredNorm().minCoeff());
}

InteriorSample interior_points(const ShapeSpec& shape, int count, double margin) {
  return interior_points(discretize(shape, fine_resolution(shape)), count, margin);
}

InteriorSample interior_points(const BoundaryGrid& grid, int count, double margin) {
  if (!(margin > 0.0)) throw EmptySampleError("interior_points: margin must be positive");
  if (count < 1) throw EmptySampleError("interior_points: count must be >= 1");
  const int d = grid.dim;

  const Eigen::VectorXd lo = grid.nodes.rowwise().minCoeff().array() + margin;
  const Eigen::VectorXd hi = grid.nodes.rowwise().maxCoeff().array() - margin;
  if ((hi - lo).minCoeff() < 0.0) {
    throw EmptySampleError("interior_points: margin " + std::to_string(margin) + " exceeds the shape extent");
  }

  // Candidates in priority order: nested lattices (coarse first), then
  // inward offsets of the boundary nodes.
  std::vector<Eigen::VectorXd> raw;
  std::vector<int> raw_level;
  const std::vector<int> levels = d == 2 ? std::vector<int>{3, 5, 9, 17, 33} : std::vector<int>{3, 5, 9};
  for (std::size_t level = 0; level < levels.size(); ++level) {
    const int per_axis = levels[level];
    const int total = d == 2 ? per_axis * per_axis : per_axis * per_axis * per_axis;
    for (int flat = 0; flat < total; ++flat) {
      Eigen::VectorXd p(d);
      int rem = flat;
      bool inherited = level > 0;
      for (int k = 0; k < d; ++k) {
        const int ik = rem % per_axis;
        rem /= per_axis;
        inherited = inherited && (ik % 2 == 0);
        p(k) = lo(k) + (hi(k) - lo(k)) * ik / (per_axis - 1);
      }
      // Even-index points of a refined lattice already appeared one level up.
      if (!inherited) {
        raw.push_back(std::move(p));
        raw_level.push_back(static_cast<int>(level));
      }
    }
  }
  const Eigen::Index stride = std::max<Eigen::Index>(1, grid.size() / (d == 2 ? 256 : 512));
  for (double s : {1.0, 1.5, 2.0, 3.0}) {
    for (Eigen::Index i = 0; i < grid.size(); i += stride) {
      raw.push_back(grid.nodes.col(i) - s * margin * grid.normals.col(i));
      raw_level.push_back(-1);
    }
  }

  std::vector<Eigen::VectorXd> cand;
  std::vector<int> cand_level;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (winding_indicator(grid, raw[i]) < 0.5) continue;
    if (verification_distance(grid, raw[i]) < margin * (1.0 - 1e-12)) continue;
    cand.push_back(raw[i]);
    cand_level.push_back(raw_level[i]);
  }
  if (static_cast<int>(cand.size()) < count) {
    throw EmptySampleError("interior_points: only " + std::to_string(cand.size()) +
                           " admissible points at margin " + std::to_string(margin));
  }

  InteriorSample out;
  out.margin = margin;
  out.points.resize(d, count);
  std::vector<double> gap(cand.size(), std::numeric_limits<double>::infinity());
  int taken = 0;
  auto take = [&](std::size_t pick) {
    out.points.col(taken++) = cand[pick];
    gap[pick] = -1.0;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (gap[i] >= 0.0) gap[i] = std::min(gap[i], (cand[i] - cand[pick]).norm());
    }
  };

  // Whole lattice levels, coarse first, while they fit.
  for (std::size_t level = 0; level < levels.size(); ++level) {
    const auto lvl = static_cast<int>(level);
    const auto size = std::count(cand_level.begin(), cand_level.end(), lvl);
    if (taken + size > count) break;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (cand_level[i] == lvl) take(i);
    }
  }

  // Remaining points by greedy farthest-point selection, seeded at the point
  // nearest the centroid if nothing was taken yet.
  if (taken == 0) {
    const Eigen::VectorXd c = grid.centroid();
    std::size_t first = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < cand.size(); ++i) {
      const double dist = (cand[i] - c).norm();
      if (dist < best - 1e-14) {
        best = dist;
        first = i;
      }
    }
    take(first);
  }
  while (taken < count) {
    std::size_t next = 0;
    double far = -1.0;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (gap[i] > far + 1e-13) {
        far = gap[i];
        next = i;
      }
    }
    take(next);
  }
  return out;
}

}  // namespace inclab
