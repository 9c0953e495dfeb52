#include "acceptance.hpp"

#include "oracles.hpp"

#include <inclab/inclab.hpp>

#include <Eigen/Dense>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>

namespace inclab::acceptance {

namespace {

constexpr double kPi = std::numbers::pi;

// Collects named measurements against limits; the criterion passes when
// every measurement is on the right side of its limit.
class Tally {
 public:
  void at_most(const std::string& what, double value, double limit) { add(what, value, "<=", limit, value <= limit); }
  void at_least(const std::string& what, double value, double limit) { add(what, value, ">=", limit, value >= limit); }
  void require(const std::string& what, bool ok) {
    pass_ = pass_ && ok;
    if (!parts_.empty()) parts_ += "; ";
    parts_ += what + (ok ? " ok" : " FAILED");
  }

  CriterionResult result(int id, const std::string& title) const { return {id, title, pass_, parts_, 0.0}; }

 private:
  void add(const std::string& what, double value, const char* op, double limit, bool ok) {
    pass_ = pass_ && ok;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s %.3g %s %.3g%s", what.c_str(), value, op, limit, ok ? "" : " FAILED");
    if (!parts_.empty()) parts_ += "; ";
    parts_ += buf;
  }

  bool pass_ = true;
  std::string parts_;
};

Eigen::VectorXd normal_component(const BoundaryGrid& g, int j) { return g.normals.row(j).transpose(); }

CriterionResult jump_relation() {
  Tally t;
  const BoundaryGrid g = discretize(Ellipse{2.0, 1.0}, 256);
  t.at_most("phi=1", jump_check(g, Density::Ones(g.size())), 1e-4);
  t.at_most("phi=n1", jump_check(g, normal_component(g, 0)), 1e-4);
  t.at_most("phi=n2", jump_check(g, normal_component(g, 1)), 1e-4);
  return t.result(1, "jump relation of the single layer on Ellipse(2,1), n=256");
}

CriterionResult gauss_identity() {
  Tally t;
  for (int n : {128, 256}) {
    for (const auto& [name, shape] : {std::pair<std::string, ShapeSpec>{"circle", make_disk()},
                                      std::pair<std::string, ShapeSpec>{"Ellipse(2,1)", Ellipse{2.0, 1.0}}}) {
      const BoundaryGrid g = discretize(shape, n);
      const NpoOperator K = npo_matrix(g);
      const Density ones = Density::Ones(g.size());
      const double row = (K.apply(ones).array() - 0.5).abs().maxCoeff();
      t.at_most(name + " n=" + std::to_string(n) + " max|K*[1]-1/2|", row, 1e-8);
      // The adjoint form int K*(x,y) dsigma(x) = 1/2 holds on every smooth curve.
      const Eigen::VectorXd col = (g.weights.transpose() * K.matrix).transpose().cwiseQuotient(g.weights);
      t.at_most(name + " n=" + std::to_string(n) + " max|K[1]-1/2|", (col.array() - 0.5).abs().maxCoeff(), 1e-8);
    }
  }
  return t.result(2, "Gauss identity K*[1] = 1/2 pointwise on circle and Ellipse(2,1)");
}

CriterionResult np_eigen() {
  Tally t;
  {
    const BoundaryGrid g = discretize(Ellipse{2.0, 1.0}, 256);
    const NpoOperator K = npo_matrix(g);
    const Eigen::VectorXd n1 = normal_component(g, 0);
    const Eigen::VectorXd n2 = normal_component(g, 1);
    t.at_most("ellipse |K*n1 - n1/6|", (K.apply(n1) - n1 / 6.0).cwiseAbs().maxCoeff(), 1e-6);
    t.at_most("ellipse |K*n2 + n2/6|", (K.apply(n2) + n2 / 6.0).cwiseAbs().maxCoeff(), 1e-6);
  }
  {
    const BoundaryGrid g = discretize(make_disk(), 256);
    const NpoOperator K = npo_matrix(g);
    t.at_most("circle |K*n1|", K.apply(normal_component(g, 0)).cwiseAbs().maxCoeff(), 1e-8);
    t.at_most("circle |K*n2|", K.apply(normal_component(g, 1)).cwiseAbs().maxCoeff(), 1e-8);
  }
  return t.result(3, "Neumann-Poincare eigen-relation for n_j on ellipse and circle");
}

CriterionResult disk_pt() {
  Tally t;
  const BoundaryGrid g = discretize(make_disk(), 256);
  double worst = 0.0;
  for (double k : {0.5, 2.0, 3.0, 10.0}) {
    const double expected = oracle::ellipse_pt_entry(1.0, 1.0, k, 0);
    const PolarizationTensor pt = polarization_tensor(g, k);
    const Eigen::MatrixXd diff = pt.M - expected * Eigen::MatrixXd::Identity(2, 2);
    worst = std::max(worst, diff.cwiseAbs().maxCoeff() / std::abs(expected));
  }
  t.at_most("max relative error over k in {0.5,2,3,10}", worst, 1e-8);
  return t.result(4, "disk polarization tensor 2 pi (k-1)/(k+1) I");
}

CriterionResult ellipse_pt() {
  Tally t;
  const BoundaryGrid g = discretize(Ellipse{2.0, 1.0}, 256);
  for (double k : {2.0, 5.0}) {
    const PolarizationTensor bem = polarization_tensor(g, k);
    const PolarizationTensor closed = ellipsoid_pt(Ellipse{2.0, 1.0}, k);
    Eigen::Matrix2d ref = Eigen::Matrix2d::Zero();
    ref(0, 0) = oracle::ellipse_pt_entry(2.0, 1.0, k, 0);
    ref(1, 1) = oracle::ellipse_pt_entry(2.0, 1.0, k, 1);
    t.at_most("k=" + std::to_string(static_cast<int>(k)) + " |BEM - closed form|",
              (bem.M - closed.M).cwiseAbs().maxCoeff(), 1e-6);
    t.at_most("k=" + std::to_string(static_cast<int>(k)) + " |closed form - oracle|",
              (closed.M - ref).cwiseAbs().maxCoeff(), 1e-12);
  }
  return t.result(5, "Ellipse(2,1) polarization tensor against the closed form");
}

std::vector<std::pair<std::string, ShapeSpec>> bound_shapes() {
  return {{"disk", make_disk()},
          {"Ellipse(2,1)", Ellipse{2.0, 1.0}},
          {"Ellipse(4,1)", Ellipse{4.0, 1.0}},
          {"square", make_unit_square()},
          {"star m=3", FourierStar{1.0, {{3, 0.2, 0.0}}}},
          {"kite", make_kite()}};
}

CriterionResult hs_bound_check() {
  Tally t;
  for (double k : {3.0, 0.5}) {
    for (const auto& [name, shape] : bound_shapes()) {
      const BoundReport b = hs_bounds(polarization_tensor(discretize(shape, default_resolution(shape)), k));
      const std::string tag = name + " k=" + (k == 3.0 ? std::string("3") : std::string("0.5"));
      t.at_least(tag + " slack1", b.slack1, -1e-5);
      t.at_least(tag + " slack2", b.slack2, -1e-5);
      const bool ellipse = std::holds_alternative<Ellipse>(shape);
      if (ellipse) {
        t.at_most(tag + " |slack2|", std::abs(b.slack2), 1e-5);
      } else if (name != "kite") {
        t.at_least(tag + " slack2", b.slack2, 1e-3);
      } else {
        t.require(tag + " unsaturated", !b.saturated2);
      }
    }
  }
  return t.result(6, "Hashin-Shtrikman bounds hold; second bound saturated only by ellipses");
}

CriterionResult eshelby_uniformity() {
  Tally t;
  {
    const BoundaryGrid g = discretize(Ellipse{2.0, 1.0}, 256);
    const InteriorSample s = interior_points(Ellipse{2.0, 1.0}, 40, 0.2);
    double worst = 0.0;
    for (const auto& row : k_independence_check(g, {0.5, 2.0, 10.0}, s)) worst = std::max(worst, row.delta);
    t.at_most("Ellipse(2,1) max delta over k in {0.5,2,10}, a=e1,e2", worst, 1e-6);
  }
  {
    const ShapeSpec sq = make_unit_square();
    const BoundaryGrid g = discretize(sq, default_resolution(sq));
    const InteriorSample s = interior_points(sq, 40, 0.1);
    double least = std::numeric_limits<double>::infinity();
    for (const auto& row : k_independence_check(g, {0.5, 2.0}, s)) least = std::min(least, row.delta);
    t.at_least("square min delta over k in {0.5,2}", least, 1e-2);
  }
  return t.result(7, "uniform interior field on Ellipse(2,1) for every k, non-uniform on the square");
}

CriterionResult interior_slope() {
  Tally t;
  double worst = 0.0;
  for (const auto& [a, b] : {std::pair{2.0, 1.0}, std::pair{4.0, 1.0}, std::pair{1.0, 2.0}, std::pair{1.0, 1.0}}) {
    const Ellipse e{a, b};
    const BoundaryGrid g = discretize(e, 256);
    const InteriorSample s = interior_points(e, 20, 0.2 * std::min(a, b));
    for (double k : {0.5, 3.0, 10.0}) {
      const LambdaMap lm = lambda_map(g, Contrast(k), s);
      for (int j = 0; j < 2; ++j) {
        worst = std::max(worst, std::abs(lm.matrix(j, j) - oracle::ellipse_slope(a, b, k, j)));
        worst = std::max(worst, std::abs(lm.matrix(1 - j, j)));
      }
    }
  }
  t.at_most("max |mean grad - 1/(1+(k-1)a_j)| over 4 ellipses x 3 contrasts", worst, 1e-6);
  return t.result(8, "interior slope 1/(1+(k-1)a_j) on ellipses");
}

CriterionResult newtonian_fits() {
  Tally t;
  {
    const Ellipsoid e{2.0, 1.5, 1.0};
    const QuadraticFitReport f = quadratic_interior_fit(e, interior_points(e, 60, 0.2));
    t.at_most("Ellipsoid(2,1.5,1) residual", f.rms_residual, 1e-6);
    double err = 0.0;
    for (int j = 0; j < 3; ++j) {
      const double aj = oracle::depolarization_quadrature(2.0, 1.5, 1.0, j);
      err = std::max(err, std::abs(f.A(j, j) - 0.5 * aj));
    }
    t.at_most("Ellipsoid(2,1.5,1) max |A_jj - a_j/2|", err, 1e-5);
  }
  {
    const Ellipse e{2.0, 1.0};
    const QuadraticFitReport f = quadratic_interior_fit(e, interior_points(e, 30, 0.2));
    t.at_most("Ellipse(2,1) residual", f.rms_residual, 1e-6);
    double err = 0.0;
    for (int j = 0; j < 2; ++j) err = std::max(err, std::abs(f.A(j, j) - 0.5 * oracle::ellipse_factor(2.0, 1.0, j)));
    t.at_most("Ellipse(2,1) max |A_jj - a_j/2|", err, 1e-5);
  }
  {
    const ShapeSpec cube = make_unit_cube();
    t.at_least("unit cube residual", quadratic_interior_fit(cube, interior_points(cube, 60, 0.1)).rms_residual, 1e-3);
    const ShapeSpec sq = make_unit_square();
    t.at_least("unit square residual", quadratic_interior_fit(sq, interior_points(sq, 30, 0.1)).rms_residual, 1e-3);
  }
  return t.result(9, "Newtonian potential is quadratic inside ellipses/ellipsoids only");
}

CriterionResult depolarization() {
  Tally t;
  const DepolarizationFactors sphere = depolarization_factors(Ellipsoid{1.0, 1.0, 1.0});
  t.at_most("sphere max |a_j - 1/3|", (sphere.a.array() - 1.0 / 3.0).abs().maxCoeff(), 1e-15);
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> axis(0.5, 3.0);
  double sum_err = 0.0;
  double quad_err = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    const double c1 = axis(rng);
    const double c2 = axis(rng);
    const double c3 = axis(rng);
    const DepolarizationFactors f = depolarization_factors(Ellipsoid{c1, c2, c3});
    sum_err = std::max(sum_err, std::abs(f.sum() - 1.0));
    for (int j = 0; j < 3; ++j) {
      quad_err = std::max(quad_err, std::abs(f.a(j) - oracle::depolarization_quadrature(c1, c2, c3, j)));
    }
  }
  t.at_most("max |sum a_j - 1| on 5 random triples", sum_err, 1e-10);
  t.at_most("max |Carlson - quadrature|", quad_err, 1e-8);
  return t.result(10, "depolarization factors of ellipsoids");
}

CriterionResult elastic_identities() {
  Tally t;
  const Ellipsoid e{2.0, 1.5, 1.0};
  const BoundaryGrid g = discretize(e, 96);
  const InteriorSample s = interior_points(e, 20, 0.25);
  const LameParams p{2.0, 1.0, 1.0, 0.5};
  validate(p);
  double matrix_phase = 0.0;
  double inclusion_phase = 0.0;
  double green = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    const Eigen::Vector3d x = s.points.col(i);
    const TraceIdentityReport r = trace_identity_check(g, p, x);
    matrix_phase = std::max(matrix_phase, r.matrix_phase.residual);
    inclusion_phase = std::max(inclusion_phase, r.inclusion_phase.residual);
    green = std::max(green, green_identity_check(g, x));
  }
  t.at_most("matrix-phase trace identity", matrix_phase, 1e-6);
  t.at_most("inclusion-phase trace identity", inclusion_phase, 1e-6);
  t.at_most("Green identity", green, 1e-6);

  const LameParams equal{2.0, 1.0, 2.0, 1.0};
  double diff = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    const TraceIdentityReport r = trace_identity_check(g, equal, s.points.col(i));
    diff = std::max({diff, r.difference.lhs.cwiseAbs().maxCoeff(), std::abs(r.difference.coefficient)});
  }
  t.at_most("equal phases: |difference layer| and |coefficient|", diff, 0.0);
  return t.result(11, "elastic trace identities at 20 interior points of Ellipsoid(2,1.5,1)");
}

CriterionResult hodograph() {
  Tally t;
  const double a = 2.0;
  const double b = 1.0;
  double boundary = 0.0;
  for (int i = 0; i < 512; ++i) {
    const double th = 2.0 * kPi * i / 512;
    const Complex w(a * std::cos(th), b * std::sin(th));
    boundary = std::max(boundary, std::abs(hodograph_map(a, b, w) - Complex(0.0, w.imag())));
  }
  t.at_most("max |psi(w) - i Im w| on 512 boundary points", boundary, 1e-10);
  const UnivalenceReport u =
      univalence_check([&](Complex w) { return hodograph_map(a, b, w); }, ellipse_exterior_map(a, b));
  t.require("univalence check", u.pass);
  t.at_most("slit endpoint error", std::max(std::abs(u.slit_lo + b), std::abs(u.slit_hi - b)), 1e-10);
  const Complex alpha = asymptotic_coefficient([&](Complex w) { return hodograph_map(a, b, w); }, {10.0, 100.0, 1000.0});
  t.at_most("|alpha - b/(a+b)|", std::abs(alpha - b / (a + b)), 1e-4);
  return t.result(12, "hodograph map of Ellipse(2,1)");
}

CriterionResult minimal_trace_shape() {
  Tally t;
  OptProblem p;
  p.k = 3.0;
  p.target_area = kPi;
  Eigen::VectorXd x0 = Eigen::VectorXd::Zero(coefficient_count(p));
  x0(0) = 0.2;
  x0(2) = 0.1;
  const OptTrace tr = minimize(p, x0);
  const double disk = 2.0 * kPi;
  t.at_most("|Tr M - 2 pi| / 2 pi", std::abs(tr.final_objective - disk) / disk, 1e-3);
  t.at_most("max |coefficient|", tr.final_coefficients.cwiseAbs().maxCoeff(), 1e-2);
  t.at_least("min evaluated (Tr M - 2 pi) / 2 pi", (tr.min_evaluated - disk) / disk, -1e-5);
  return t.result(13, "trace minimization over star shapes converges to the disk");
}

CriterionResult decay() {
  Tally t;
  const BoundaryGrid g = discretize(make_disk(), 256);
  const Eigen::Vector2d a(1.0, 0.0);
  const Density phi = solve_density(g, Contrast(3.0), a);
  const double u10 = std::abs(field_perturbation(g, phi, Eigen::Vector2d(10.0, 0.0)));
  const double u20 = std::abs(field_perturbation(g, phi, Eigen::Vector2d(20.0, 0.0)));
  const double ratio = (u10 / u20) / 2.0;
  t.at_most("|(u10/u20)/2 - 1|", std::abs(ratio - 1.0), 0.2);
  return t.result(14, "far-field decay |u - a.x| ~ 1/|x| on the circle, k=3");
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "jump relation", jump_relation},
      {2, "Gauss identity", gauss_identity},
      {3, "NP eigen-relation", np_eigen},
      {4, "disk PT", disk_pt},
      {5, "ellipse PT", ellipse_pt},
      {6, "HS bounds", hs_bound_check},
      {7, "Eshelby uniformity", eshelby_uniformity},
      {8, "interior slope", interior_slope},
      {9, "Newtonian quadratic interior", newtonian_fits},
      {10, "depolarization factors", depolarization},
      {11, "elastic trace identities", elastic_identities},
      {12, "hodograph", hodograph},
      {13, "trace minimization", minimal_trace_shape},
      {14, "decay", decay},
  };
  return all;
}

std::string format_line(const CriterionResult& r) {
  char head[64];
  std::snprintf(head, sizeof head, "[%s] %02d ", r.pass ? "PASS" : "FAIL", r.id);
  char tail[32];
  std::snprintf(tail, sizeof tail, " (%.1fs)", r.seconds);
  return head + r.title + ": " + r.detail + tail;
}

std::vector<CriterionResult> run(const std::set<int>& only, std::ostream& out) {
  std::vector<CriterionResult> results;
  for (const Criterion& c : criteria()) {
    if (!only.empty() && only.count(c.id) == 0) continue;
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {c.id, c.title, false, std::string("exception: ") + e.what(), 0.0};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out << format_line(r) << std::endl;
    results.push_back(r);
  }
  return results;
}

}  // namespace inclab::acceptance
