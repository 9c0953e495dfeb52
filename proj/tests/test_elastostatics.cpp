#include "support.hpp"

#include <acceptance/oracles.hpp>
#include <inclab/elastostatics.hpp>
#include <inclab/errors.hpp>

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace inclab;

namespace {

// mu Lap u + (lambda + mu) grad div u for the j-th column of the Kelvin matrix,
// by central differences.
Eigen::Vector3d lame_operator_column(double lambda, double mu, const Eigen::Vector3d& x, int j, double h) {
  auto u = [&](const Eigen::Vector3d& y) -> Eigen::Vector3d { return kelvin(lambda, mu, y).col(j); };
  Eigen::Vector3d lap = Eigen::Vector3d::Zero();
  Eigen::Vector3d grad_div = Eigen::Vector3d::Zero();
  const Eigen::Matrix3d I = Eigen::Matrix3d::Identity();
  for (int a = 0; a < 3; ++a) {
    lap += (u(x + h * I.col(a)) - 2.0 * u(x) + u(x - h * I.col(a))) / (h * h);
    for (int b = 0; b < 3; ++b) {
      const double d2 = (u(x + h * I.col(a) + h * I.col(b))(b) - u(x + h * I.col(a) - h * I.col(b))(b) -
                         u(x - h * I.col(a) + h * I.col(b))(b) + u(x - h * I.col(a) - h * I.col(b))(b)) /
                        (4.0 * h * h);
      grad_div(a) += d2;
    }
  }
  return mu * lap + (lambda + mu) * grad_div;
}

}  // namespace

TEST_CASE("kelvin constants") {
  const KelvinConstants c = kelvin_constants(2.0, 1.0);
  CHECK(c.alpha1 == doctest::Approx(0.5 * (1.0 + 0.25)));
  CHECK(c.alpha2 == doctest::Approx(0.5 * (1.0 - 0.25)));
}

TEST_CASE("property: kelvin matrix solves the Lame system away from the origin") {
  test::Gen gen(59);
  for (int trial = 0; trial < 6; ++trial) {
    const double mu = gen.uniform(0.3, 3.0);
    const double lambda = gen.uniform(-0.5 * mu, 5.0);
    const Eigen::Vector3d x(gen.uniform(-1, 1), gen.uniform(-1, 1), gen.uniform(0.5, 1.5));
    for (int j = 0; j < 3; ++j) {
      const Eigen::Vector3d r = lame_operator_column(lambda, mu, x, j, 1e-3);
      CHECK(r.norm() < 1e-4 * kelvin(lambda, mu, x).norm() / x.squaredNorm());
    }
  }
}

TEST_CASE("property: kelvin matrix is symmetric, even and homogeneous of degree -1") {
  test::Gen gen(61);
  for (int trial = 0; trial < 10; ++trial) {
    const double mu = gen.uniform(0.3, 3.0);
    const double lambda = gen.uniform(0.0, 5.0);
    const Eigen::Vector3d x(gen.uniform(-2, 2), gen.uniform(-2, 2), gen.uniform(-2, 2));
    const double t = gen.uniform(0.2, 5.0);
    const Eigen::Matrix3d G = kelvin(lambda, mu, x);
    CHECK((G - G.transpose()).cwiseAbs().maxCoeff() < 1e-15 * G.norm());
    CHECK((kelvin(lambda, mu, -x) - G).cwiseAbs().maxCoeff() == 0.0);
    CHECK((kelvin(lambda, mu, t * x) - G / t).cwiseAbs().maxCoeff() < 1e-14 * G.norm());
  }
  CHECK_THROWS_AS(kelvin(1.0, 1.0, Eigen::Vector3d::Zero()), DomainError);
}

TEST_CASE("kelvin layer of a constant density over the unit sphere") {
  const BoundaryGrid g = discretize(ShapeSpec{Ellipsoid{1, 1, 1}}, 48);
  for (auto [lambda, mu] : {std::pair{2.0, 1.0}, std::pair{0.5, 3.0}}) {
    for (int j = 0; j < 3; ++j) {
      Eigen::MatrixXd psi = Eigen::MatrixXd::Zero(3, g.size());
      psi.row(j).setOnes();
      const Eigen::Vector3d v = elastic_single_layer(g, lambda, mu, psi, Eigen::Vector3d::Zero());
      const Eigen::Vector3d expected = oracle::kelvin_sphere_average(lambda, mu) * Eigen::Vector3d::Unit(j);
      CHECK((v - expected).norm() < 1e-12);
    }
  }
}

TEST_CASE("conormal derivative of linear fields") {
  const Eigen::Vector3d n = Eigen::Vector3d(1.0, 2.0, 2.0) / 3.0;
  const Eigen::VectorXd t = conormal_linear(Eigen::Matrix3d::Identity(), 2.0, 1.0, n);
  CHECK((t - (3.0 * 2.0 + 2.0 * 1.0) * n).norm() < 1e-15);
  Eigen::Matrix3d skew;
  skew << 0, 1, 0, -1, 0, 0, 0, 0, 0;
  CHECK(conormal_linear(skew, 2.0, 1.0, n).norm() == 0.0);
}

TEST_CASE("lame parameter admissibility") {
  CHECK_FALSE(lame_violation({2, 1, 1, 0.5}).has_value());
  auto bad_mu = lame_violation({2, -1, 1, 0.5});
  REQUIRE(bad_mu.has_value());
  CHECK(bad_mu->rfind("ellipticity", 0) == 0);
  auto bad_bulk = lame_violation({-1, 1, 1, 0.5});
  REQUIRE(bad_bulk.has_value());
  CHECK(bad_bulk->rfind("ellipticity", 0) == 0);
  auto bad_order = lame_violation({2, 1, 3, 0.5});
  REQUIRE(bad_order.has_value());
  CHECK(bad_order->rfind("ordering", 0) == 0);
  CHECK_THROWS_AS(validate(LameParams{2, 1, 3, 0.5}), DomainError);
}

TEST_CASE("kolosov constant") {
  CHECK(kolosov(1.0, 1.0) == doctest::Approx(2.0));
  CHECK(kolosov(std::numeric_limits<double>::infinity(), 1.0) == 1.0);
}

TEST_CASE("property: trace identities at interior points of ellipsoids") {
  test::Gen gen(67);
  for (int trial = 0; trial < 3; ++trial) {
    const Ellipsoid e = gen.ellipsoid();
    const BoundaryGrid g = discretize(e, 64);
    const double mu = gen.uniform(0.5, 2.0);
    const double lambda = gen.uniform(0.5, 3.0);
    const LameParams p{lambda, mu, 0.5 * lambda, 0.5 * mu};
    const Eigen::Vector3d x(0.2 * e.c1, -0.1 * e.c2, 0.15 * e.c3);
    const TraceIdentityReport r = trace_identity_check(g, p, x);
    CHECK(r.matrix_phase.residual < 1e-8);
    CHECK(r.inclusion_phase.residual < 1e-8);
    CHECK(r.difference.residual < 1e-8);
    CHECK(r.matrix_phase.coefficient == doctest::Approx(-(2 * mu + 3 * lambda) / (2 * mu + lambda)));
  }
}

TEST_CASE("equal phases make the difference identity vanish exactly") {
  const BoundaryGrid g = discretize(ShapeSpec{Ellipsoid{2, 1.5, 1}}, 32);
  const TraceIdentityReport r = trace_identity_check(g, {2, 1, 2, 1}, Eigen::Vector3d(0.1, 0.2, 0.0));
  CHECK(r.difference.lhs.norm() == 0.0);
  CHECK(r.difference.coefficient == 0.0);
}

TEST_CASE("trace identity converges under refinement") {
  const Eigen::Vector3d x(0.7, 0.0, 0.0);
  const LameParams p{2, 1, 1, 0.5};
  const double coarse = trace_identity_check(discretize(ShapeSpec{Ellipsoid{1, 1, 1}}, 32), p, x).matrix_phase.residual;
  const double fine = trace_identity_check(discretize(ShapeSpec{Ellipsoid{1, 1, 1}}, 64), p, x).matrix_phase.residual;
  CHECK(fine < coarse);
  CHECK(fine < 1e-10);
}

TEST_CASE("reference cases: conormal derivatives and kolosov constants") {
  const Eigen::Vector3d n(0.0, 0.6, 0.8);
  const double lt = 1.0;
  const double mt = 0.5;
  CHECK((conormal_linear(Eigen::Matrix3d::Identity(), lt, mt, n) - (3.0 * lt + 2.0 * mt) * n).norm() < 1e-15);
  CHECK(kolosov(1.0, 1.0) == doctest::Approx(2.0));
  CHECK(kolosov(0.0, 1.0) == doctest::Approx(3.0));
  CHECK(kolosov(1e12, 1.0) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("reference cases: kelvin layers on the sphere") {
  const BoundaryGrid g = discretize_ellipsoid(Ellipsoid{1, 1, 1}, 32, 64);
  CHECK(elastic_single_layer(g, 2.0, 1.0, g.normals, Eigen::Vector3d::Zero()).norm() < 1e-12);
  const TraceIdentityReport r = trace_identity_check(g, {1, 1, 1, 1}, Eigen::Vector3d(0.3, 0.0, 0.0));
  CHECK(r.matrix_phase.residual <= 1e-6);
  const TraceIdentityReport e =
      trace_identity_check(discretize(ShapeSpec{Ellipsoid{2, 1.5, 1}}, 64), {2, 1, 1, 0.5}, Eigen::Vector3d(0.2, 0.1, -0.1));
  CHECK(e.matrix_phase.residual <= 1e-6);
  CHECK(e.inclusion_phase.residual <= 1e-6);
}

TEST_CASE("reference cases: refinement gains at least a factor of ten") {
  const Eigen::Vector3d x(0.7, 0.0, 0.0);
  const LameParams p{1, 1, 1, 1};
  const double coarse =
      trace_identity_check(discretize_ellipsoid(Ellipsoid{1, 1, 1}, 32, 64), p, x).matrix_phase.residual;
  const double fine =
      trace_identity_check(discretize_ellipsoid(Ellipsoid{1, 1, 1}, 64, 128), p, x).matrix_phase.residual;
  CHECK(fine * 10.0 <= coarse);
}
