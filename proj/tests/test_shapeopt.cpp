#include "support.hpp"

#include <inclab/errors.hpp>
#include <inclab/nelder_mead.hpp>
#include <inclab/polarization.hpp>
#include <inclab/shapeopt.hpp>

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <regex>

using namespace inclab;

TEST_CASE("nelder-mead minimizes the Rosenbrock function") {
  auto rosen = [](const Eigen::VectorXd& x) {
    return 100.0 * std::pow(x(1) - x(0) * x(0), 2) + std::pow(1.0 - x(0), 2);
  };
  NelderMeadOptions opts;
  opts.initial_step = 0.5;
  opts.x_tol = 1e-10;
  std::vector<double> best;
  const NelderMeadResult r =
      nelder_mead(rosen, Eigen::Vector2d(-1.2, 1.0), opts, [&](int, const Eigen::VectorXd&, double f) {
        best.push_back(f);
      });
  CHECK(r.converged);
  CHECK((r.x - Eigen::Vector2d(1.0, 1.0)).norm() < 1e-6);
  REQUIRE_FALSE(best.empty());
  for (std::size_t i = 1; i < best.size(); ++i) CHECK(best[i] <= best[i - 1]);
  const NelderMeadResult again = nelder_mead(rosen, Eigen::Vector2d(-1.2, 1.0), opts);
  CHECK((again.x - r.x).norm() == 0.0);
  CHECK(again.evaluations == r.evaluations);
}

TEST_CASE("property: nelder-mead finds the minimum of random convex quadratics") {
  test::Gen gen(83);
  for (int trial = 0; trial < 5; ++trial) {
    const int n = gen.integer(2, 6);
    Eigen::MatrixXd B(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) B(i, j) = gen.uniform(-1, 1);
    const Eigen::MatrixXd A = B * B.transpose() + Eigen::MatrixXd::Identity(n, n);
    Eigen::VectorXd c(n);
    for (int i = 0; i < n; ++i) c(i) = gen.uniform(-1, 1);
    auto f = [&](const Eigen::VectorXd& x) { return (x - c).dot(A * (x - c)); };
    NelderMeadOptions opts;
    opts.initial_step = 0.5;
    opts.x_tol = 1e-9;
    opts.restarts = 2;
    const NelderMeadResult r = nelder_mead(f, Eigen::VectorXd::Zero(n), opts);
    CHECK((r.x - c).norm() < 1e-6);
  }
}

TEST_CASE("problem validation") {
  OptProblem p;
  CHECK_NOTHROW(validate(p));
  p.k = 0.5;
  CHECK_THROWS_AS(validate(p), DomainError);
  p = {};
  p.n = 64;
  CHECK_THROWS_AS(validate(p), ResolutionError);
  p = {};
  p.max_mode = 1;
  CHECK_THROWS_AS(validate(p), DomainError);
  CHECK(coefficient_count(OptProblem{}) == 10);
}

TEST_CASE("property: stars are renormalized to the target area") {
  test::Gen gen(89);
  for (int trial = 0; trial < 10; ++trial) {
    Eigen::VectorXd c(4);
    for (int i = 0; i < 4; ++i) c(i) = gen.uniform(-0.15, 0.15);
    const double area = gen.uniform(0.5, 4.0);
    const FourierStar s = star_from_coefficients(c, 3, area);
    CHECK(measure(s) == doctest::Approx(area).epsilon(1e-12));
  }
  CHECK_THROWS(star_from_coefficients(Eigen::VectorXd::Zero(3), 3, 1.0));
}

TEST_CASE("invalid shapes receive the penalty value") {
  OptProblem p;
  p.max_mode = 2;
  const Evaluation ev = evaluate_objective(p, Eigen::Vector2d(1.5, 0.0));
  CHECK_FALSE(ev.valid);
  CHECK(ev.value == doctest::Approx(10.0 * minimal_trace_target(p.k, p.target_area, 2)));
}

TEST_CASE("property: no perturbed star beats the disk") {
  OptProblem p;
  p.max_mode = 4;
  const double disk = objective(p, Eigen::VectorXd::Zero(coefficient_count(p)));
  CHECK(disk == doctest::Approx(minimal_trace_target(p.k, p.target_area, 2)).epsilon(1e-12));
  test::Gen gen(97);
  for (int trial = 0; trial < 6; ++trial) {
    Eigen::VectorXd c(coefficient_count(p));
    for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = gen.uniform(-0.1, 0.1);
    CHECK(objective(p, c) > disk);
  }
}

TEST_CASE("minimization from a perturbed star returns to the disk") {
  OptProblem p;
  p.max_mode = 3;
  p.n = 128;
  const OptTrace tr = minimize(p, Eigen::Vector4d(0.15, -0.05, 0.08, 0.02));
  CHECK(tr.converged);
  CHECK(tr.gap < 1e-6 * tr.target);
  CHECK(tr.min_evaluated >= tr.target * (1.0 - 1e-10));
  CHECK(tr.final_coefficients.cwiseAbs().maxCoeff() < 1e-3);
  CHECK(tr.max_area_error < 1e-10);
  REQUIRE_FALSE(tr.history.empty());
  CHECK(tr.history.back().objective == doctest::Approx(tr.final_objective));
}

TEST_CASE("bound gap scan marks only ellipses as saturated") {
  const auto rows = bound_gap_scan({{"ellipse", Ellipse{2, 1}}, {"square", make_unit_square()}}, 3.0);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].saturated2);
  CHECK_FALSE(rows[1].saturated2);
  CHECK(rows[1].slack2 > 1e-3);
  CHECK_THROWS_AS(bound_gap_scan({{"cube", make_unit_cube()}}, 3.0), DomainError);
}

TEST_CASE("svg viewBox is the bounding box scaled by 1.2") {
  const FourierStar disk{1.0, {}};
  const std::string svg = svg_overlay(disk, disk, 1.0);
  std::smatch m;
  REQUIRE(std::regex_search(svg, m, std::regex("viewBox=\"([-0-9.]+) ([-0-9.]+) ([-0-9.]+) ([-0-9.]+)\"")));
  CHECK(std::stod(m[1]) == doctest::Approx(-1.2).epsilon(1e-5));
  CHECK(std::stod(m[2]) == doctest::Approx(-1.2).epsilon(1e-5));
  CHECK(std::stod(m[3]) == doctest::Approx(2.4).epsilon(1e-5));
  CHECK(std::stod(m[4]) == doctest::Approx(2.4).epsilon(1e-5));
  CHECK(svg.find("<circle") != std::string::npos);
  CHECK(std::count(svg.begin(), svg.end(), '\n') == 5);
}

TEST_CASE("reference cases: objective values") {
  OptProblem p;
  p.max_mode = 3;
  const double disk = objective(p, Eigen::VectorXd::Zero(4));
  CHECK(disk == doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-12));
  CHECK(objective(p, Eigen::Vector4d(0.1, 0.0, 0.0, 0.0)) > disk);
  const Eigen::Vector4d c(0.08, 0.05, -0.04, 0.03);
  const Eigen::Vector4d mirrored(0.08, -0.05, -0.04, -0.03);
  CHECK(objective(p, c) == doctest::Approx(objective(p, mirrored)).epsilon(1e-10));
}

TEST_CASE("reference cases: minimization") {
  OptProblem p;
  p.max_mode = 3;
  p.n = 128;
  const OptTrace at_disk = minimize(p, Eigen::VectorXd::Zero(4));
  CHECK(std::abs(at_disk.gap) <= 1e-8 * at_disk.target);
  for (double k : {1.5, 10.0}) {
    p.k = k;
    const OptTrace tr = minimize(p, Eigen::Vector4d(0.2, 0.0, 0.1, 0.0));
    CHECK(tr.gap <= 1e-3 * tr.target);
    CHECK(tr.final_coefficients.cwiseAbs().maxCoeff() <= 1e-2);
  }
}

TEST_CASE("reference cases: gap scan") {
  const auto rows = bound_gap_scan({{"disk", make_disk()},
                                    {"ellipse 2:1", Ellipse{2, 1}},
                                    {"ellipse 4:1", Ellipse{4, 1}},
                                    {"square", make_unit_square()},
                                    {"star", FourierStar{1.0, {{3, 0.2, 0.0}}}}},
                                   3.0);
  for (int i : {0, 1, 2}) CHECK(std::abs(rows[i].slack2) <= 1e-5);
  for (int i : {3, 4}) CHECK(rows[i].slack2 >= 1e-3);
  const std::vector<ShapeSpec> shapes = {make_disk(), Ellipse{2, 1}, Ellipse{4, 1}, make_unit_square(),
                                         FourierStar{1.0, {{3, 0.2, 0.0}}}};
  // Trace per unit area.
  const double disk = rows[0].trace / measure(shapes[0]);
  for (int i = 1; i < 5; ++i) CHECK(rows[i].trace / measure(shapes[i]) > disk);
}
