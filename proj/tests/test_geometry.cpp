#include "support.hpp"

#include <acceptance/oracles.hpp>
#include <inclab/errors.hpp>
#include <inclab/geometry.hpp>
#include <inclab/quadrature.hpp>

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace inclab;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("gauss-legendre integrates polynomials of degree 2n-1 exactly") {
  for (int n : {1, 2, 5, 20, 48}) {
    const QuadratureRule q = gauss_legendre(n, -0.5, 2.0);
    CHECK(q.weights.sum() == doctest::Approx(2.5).epsilon(1e-14));
    const int deg = 2 * n - 1;
    double sum = 0.0;
    for (Eigen::Index i = 0; i < q.nodes.size(); ++i) sum += q.weights(i) * std::pow(q.nodes(i), deg);
    const double exact = (std::pow(2.0, deg + 1) - std::pow(-0.5, deg + 1)) / (deg + 1);
    CHECK(sum == doctest::Approx(exact).epsilon(1e-12));
  }
}

TEST_CASE("shape validation") {
  CHECK_THROWS_AS(validate(Ellipse{0.0, 1.0}), InvalidShapeError);
  CHECK_THROWS_AS(validate(Ellipsoid{1.0, -1.0, 1.0}), InvalidShapeError);
  CHECK_THROWS_AS(validate(Cuboid{1.0, 0.0, 1.0}), InvalidShapeError);
  Polygon cw{{{0, 0}, {0, 1}, {1, 1}, {1, 0}}};
  CHECK_THROWS_AS(validate(cw), InvalidShapeError);
  Polygon bowtie{{{0, 0}, {1, 1}, {1, 0}, {0, 1}}};
  CHECK_THROWS_AS(validate(bowtie), InvalidShapeError);
  CHECK_THROWS_AS(validate(Polygon{{{0, 0}, {1, 0}}}), InvalidShapeError);
  FourierStar negative;
  negative.modes.push_back({2, 1.2, 0.0});
  CHECK_THROWS_AS(validate(negative), InvalidShapeError);
  CHECK_NOTHROW(validate(make_kite()));
  CHECK_THROWS_AS(discretize(make_disk(), 8), ResolutionError);
}

TEST_CASE("measures of the reference shapes") {
  CHECK(measure(make_disk(2.0)) == doctest::Approx(4.0 * kPi));
  CHECK(measure(make_unit_square()) == doctest::Approx(1.0));
  CHECK(measure(make_unit_cube()) == doctest::Approx(1.0));
  CHECK(measure(Ellipsoid{2.0, 1.5, 1.0}) == doctest::Approx(4.0 / 3.0 * kPi * 3.0));
  CHECK(dimension(make_kite()) == 2);
  CHECK(dimension(make_unit_cube()) == 3);
}

TEST_CASE("grid weights sum to the ellipse perimeter") {
  for (auto [a, b] : {std::pair{2.0, 1.0}, std::pair{1.0, 3.0}, std::pair{1.0, 1.0}}) {
    const BoundaryGrid g = discretize(Ellipse{a, b}, 256);
    CHECK(g.weights.sum() == doctest::Approx(oracle::ellipse_perimeter(a, b)).epsilon(1e-13));
  }
}

TEST_CASE("property: divergence-theorem measure matches the analytic measure") {
  test::Gen gen(11);
  for (int trial = 0; trial < 12; ++trial) {
    Ellipse e = gen.ellipse();
    e.center = {gen.uniform(-2, 2), gen.uniform(-2, 2)};
    e.rotation = gen.uniform(0, kPi);
    const FourierStar s = gen.star();
    const Ellipsoid el = gen.ellipsoid();
    CHECK(discretize(e, 256).enclosed_measure() == doctest::Approx(measure(e)).epsilon(1e-12));
    CHECK(discretize(s, 256).enclosed_measure() == doctest::Approx(measure(s)).epsilon(1e-10));
    CHECK(discretize(el, 48).enclosed_measure() == doctest::Approx(measure(el)).epsilon(1e-8));
  }
  for (const ShapeSpec& p : {make_unit_square(), make_kite(), make_unit_cube()}) {
    CHECK(discretize(p, default_resolution(p)).enclosed_measure() == doctest::Approx(measure(p)).epsilon(1e-10));
  }
}

TEST_CASE("property: normals are unit and outward") {
  for (const ShapeSpec& s : {make_disk(), ShapeSpec{Ellipse{2, 1}}, make_unit_square(), make_kite(),
                             ShapeSpec{Ellipsoid{2, 1.5, 1}}, make_unit_cube()}) {
    const BoundaryGrid g = discretize(s, dimension(s) == 2 ? 128 : 24);
    const Eigen::VectorXd c = g.centroid();
    for (Eigen::Index i = 0; i < g.size(); ++i) {
      CHECK(g.normal(i).norm() == doctest::Approx(1.0).epsilon(1e-12));
      // Star-shaped about the centroid, so n points away from it.
      CHECK(g.normal(i).dot(g.node(i) - c) > 0.0);
    }
  }
}

TEST_CASE("winding indicator separates inside from outside") {
  const BoundaryGrid g = discretize(make_kite(), 256);
  CHECK(winding_indicator(g, Eigen::Vector2d(0.0, 0.0)) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(std::abs(winding_indicator(g, Eigen::Vector2d(5.0, 0.0))) < 1e-8);
  const BoundaryGrid c = discretize(make_unit_cube(), 24);
  CHECK(winding_indicator(c, Eigen::Vector3d(0.1, 0.0, -0.2)) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(std::abs(winding_indicator(c, Eigen::Vector3d(2.0, 0.0, 0.0))) < 1e-6);
}

TEST_CASE("interior points on the square form the 3x3 lattice") {
  const InteriorSample s = interior_points(make_unit_square(), 9, 0.1);
  REQUIRE(s.size() == 9);
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    for (int d = 0; d < 2; ++d) {
      const double v = s.points(d, i);
      const bool on_lattice =
          std::abs(v - 0.1) < 1e-12 || std::abs(v - 0.5) < 1e-12 || std::abs(v - 0.9) < 1e-12;
      CHECK(on_lattice);
    }
  }
}

TEST_CASE("property: interior points respect the margin and are deterministic") {
  for (const ShapeSpec& s : {ShapeSpec{Ellipse{2, 1}}, make_kite(), ShapeSpec{Ellipsoid{2, 1.5, 1}}, make_unit_cube()}) {
    const InteriorSample a = interior_points(s, 25, 0.1);
    const InteriorSample b = interior_points(s, 25, 0.1);
    REQUIRE(a.size() == 25);
    CHECK((a.points - b.points).norm() == 0.0);
    const BoundaryGrid g = discretize(s, dimension(s) == 2 ? 512 : 48);
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      CHECK(winding_indicator(g, a.points.col(i)) > 0.5);
      CHECK(node_distance(g, a.points.col(i)) >= 0.1 * (1.0 - 1e-9));
    }
  }
}

TEST_CASE("interior points report infeasible requests") {
  CHECK_THROWS_AS(interior_points(make_disk(), 5, 1.5), EmptySampleError);
  CHECK_THROWS_AS(interior_points(make_disk(), 5, -0.1), EmptySampleError);
  CHECK_THROWS_AS(interior_points(make_disk(), 0, 0.1), EmptySampleError);
}

TEST_CASE("describe is stable") {
  CHECK(describe(Ellipse{2, 1}) == "ellipse(2,1)");
  CHECK(describe(make_unit_cube()) == "cuboid(0.5,0.5,0.5)");
}

TEST_CASE("reference cases: discretization and measure") {
  CHECK(discretize(make_disk(), 64).weights.sum() == doctest::Approx(2.0 * kPi).epsilon(1e-12));
  CHECK(discretize_ellipsoid(Ellipsoid{1, 1, 1}, 32, 64).weights.sum() == doctest::Approx(4.0 * kPi).epsilon(1e-9));
  CHECK(measure(make_disk()) == doctest::Approx(kPi));
  CHECK(measure(FourierStar{1.0, {{2, 0.1, 0.0}}}) == doctest::Approx(kPi * (1.0 + 0.01 / 2.0)).epsilon(1e-12));
}

TEST_CASE("reference cases: interior samples") {
  const InteriorSample disk = interior_points(make_disk(), 25, 0.2);
  REQUIRE(disk.size() == 25);
  for (Eigen::Index i = 0; i < disk.size(); ++i) CHECK(disk.points.col(i).norm() <= 0.8 + 1e-12);
  const InteriorSample ell = interior_points(Ellipse{2, 1}, 10, 0.1);
  REQUIRE(ell.size() == 10);
  for (Eigen::Index i = 0; i < ell.size(); ++i) {
    const double x = ell.points(0, i);
    const double y = ell.points(1, i);
    CHECK(x * x / 4.0 + y * y < 1.0 - 1e-3);
  }
}
