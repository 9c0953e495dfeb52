#include "support.hpp"

#include <inclab/errors.hpp>
#include <inclab/layerpot.hpp>
#include <inclab/polarization.hpp>
#include <inclab/transmission.hpp>

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

using namespace inclab;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("contrast validation") {
  CHECK_THROWS_AS(Contrast(1.0), DomainError);
  CHECK_THROWS_AS(Contrast(0.0), DomainError);
  CHECK_THROWS_AS(Contrast(-2.0), DomainError);
  CHECK_THROWS_AS(Contrast(std::numeric_limits<double>::quiet_NaN()), DomainError);
  CHECK(Contrast(3.0).lambda() == doctest::Approx(1.0));
}

TEST_CASE("property: transmission densities have zero mean") {
  test::Gen gen(31);
  for (int trial = 0; trial < 6; ++trial) {
    const BoundaryGrid g = discretize(gen.star(), 192);
    const TransmissionSolver solver(g, Contrast(gen.contrast()));
    const Density phi = solver.solve_direction(Eigen::Vector2d(gen.uniform(-1, 1), gen.uniform(-1, 1)));
    CHECK(std::abs(g.weights.dot(phi)) < 1e-10 * g.weights.dot(phi.cwiseAbs()));
  }
}

TEST_CASE("disk interior field is 2/(k+1) a") {
  const BoundaryGrid g = discretize(make_disk(), 128);
  const InteriorSample sample = interior_points(make_disk(), 12, 0.3);
  for (double k : {0.2, 3.0, 50.0}) {
    const Eigen::Vector2d a(0.6, -0.8);
    const FieldReport f = interior_field(g, solve_density(g, Contrast(k), a), a, sample);
    CHECK((f.mean_gradient - 2.0 / (k + 1.0) * a).norm() < 1e-12);
    CHECK(f.delta < 1e-12);
  }
}

TEST_CASE("property: ellipse interior field is uniform for every k") {
  test::Gen gen(37);
  for (int trial = 0; trial < 4; ++trial) {
    const Ellipse e = gen.ellipse();
    const BoundaryGrid g = discretize(e, 512);
    const InteriorSample sample = interior_points(e, 20, 0.3 * std::min(e.a, e.b));
    const auto rows = k_independence_check(g, {gen.contrast(), gen.contrast()}, sample);
    for (const auto& row : rows) CHECK(row.delta < 1e-9);
    const LambdaMap lm = lambda_map(g, Contrast(gen.contrast()), sample);
    CHECK(lm.uniform);
    CHECK(lm.invertible);
    CHECK(std::abs(lm.matrix(0, 1)) < 1e-9);
  }
}

TEST_CASE("square interior field is not uniform") {
  const BoundaryGrid g = discretize(make_unit_square(), 64);
  const LambdaMap lm = lambda_map(g, Contrast(5.0), interior_points(make_unit_square(), 30, 0.1));
  CHECK_FALSE(lm.uniform);
  CHECK(lm.invertible);
  CHECK(lm.deltas.minCoeff() > 1e-2);
}

TEST_CASE("flux continuity across the interface") {
  // k du/dn|- = du/dn|+ with u = a.x + S[phi].
  const BoundaryGrid g = discretize(Ellipse{2.0, 1.0}, 128);
  const double k = 4.0;
  const Eigen::Vector2d a(1.0, 0.5);
  const Density phi = solve_density(g, Contrast(k), a);
  const Density an = g.normals.transpose() * a;
  const Density inner = an + one_sided_normal_derivative(g, phi, Side::Interior);
  const Density outer = an + one_sided_normal_derivative(g, phi, Side::Exterior);
  CHECK((k * inner - outer).cwiseAbs().maxCoeff() < 1e-5 * outer.cwiseAbs().maxCoeff());
}

TEST_CASE("far field is the dipole of the polarization tensor") {
  const BoundaryGrid g = discretize(make_kite(), 256);
  const double k = 3.0;
  const PolarizationTensor pt = polarization_tensor(g, k);
  const Density phi = solve_density(g, Contrast(k), Eigen::Vector2d(1.0, 0.0));
  for (double R : {1e3, 1e4}) {
    const Eigen::Vector2d x(R * 0.6, R * 0.8);
    const double dipole = x.dot(pt.M.row(0).transpose()) / (2.0 * kPi * x.squaredNorm());
    CHECK(field_perturbation(g, phi, x) == doctest::Approx(dipole).epsilon(10.0 / R));
  }
}

TEST_CASE("solver reuse matches one-shot solves") {
  const BoundaryGrid g = discretize(make_kite(), 128);
  const TransmissionSolver solver(g, Contrast(0.3));
  const Eigen::Vector2d a(0.2, 0.9);
  CHECK((solver.solve_direction(a) - solve_density(g, Contrast(0.3), a)).norm() < 1e-13);
  CHECK(solver.npo().size() == g.size());
}

TEST_CASE("reference cases: densities") {
  const BoundaryGrid circle = discretize(make_disk(), 128);
  const Density phi1 = solve_density(circle, Contrast(3.0), Eigen::Vector2d(1.0, 0.0));
  const Density phi2 = solve_density(circle, Contrast(3.0), Eigen::Vector2d(0.0, 1.0));
  for (Eigen::Index i = 0; i < circle.size(); ++i) {
    CHECK(phi1(i) == doctest::Approx(std::cos(circle.params(i))).epsilon(1e-8).scale(1.0));
    CHECK(phi2(i) == doctest::Approx(std::sin(circle.params(i))).epsilon(1e-8).scale(1.0));
  }
  const BoundaryGrid ell = discretize(Ellipse{2, 1}, 256);
  const Density phi = solve_density(ell, Contrast(2.0), Eigen::Vector2d(1.0, 0.0));
  const Density n1 = ell.normals.row(0).transpose();
  CHECK((phi - 0.75 * n1).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("reference cases: interior fields and slopes") {
  const Ellipse e{2, 1};
  const BoundaryGrid ell = discretize(e, 256);
  const InteriorSample es = interior_points(e, 30, 0.2);
  const Eigen::Vector2d e2(0.0, 1.0);
  const FieldReport f = interior_field(ell, solve_density(ell, Contrast(5.0), e2), e2, es);
  CHECK(f.delta <= 1e-6);
  CHECK(f.mean_gradient(1) == doctest::Approx(1.0 / (1.0 + 4.0 * 2.0 / 3.0)).epsilon(1e-8));

  const BoundaryGrid sq = discretize(make_unit_square(), 64);
  const InteriorSample ss = interior_points(make_unit_square(), 30, 0.1);
  const Eigen::Vector2d e1(1.0, 0.0);
  CHECK(interior_field(sq, solve_density(sq, Contrast(5.0), e1), e1, ss).delta >= 1e-2);

  const BoundaryGrid circle = discretize(make_disk(), 128);
  const LambdaMap lc = lambda_map(circle, Contrast(3.0), interior_points(make_disk(), 20, 0.2));
  CHECK((lc.matrix - 0.5 * Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() < 1e-8);
  const LambdaMap le = lambda_map(ell, Contrast(2.0), es);
  CHECK((le.matrix - Eigen::Vector2d(0.75, 0.6).asDiagonal().toDenseMatrix()).cwiseAbs().maxCoeff() < 1e-6);
  CHECK(std::abs(le.determinant) > 0.0);
}

TEST_CASE("reference cases: k-independence") {
  const auto ell = k_independence_check(discretize(Ellipse{2, 1}, 256), {0.5, 2.0, 10.0},
                                        interior_points(Ellipse{2, 1}, 30, 0.2));
  CHECK(ell.size() == 6);
  for (const auto& r : ell) CHECK(r.delta <= 1e-6);
  const auto circ = k_independence_check(discretize(make_disk(), 128), {0.5, 2.0}, interior_points(make_disk(), 20, 0.2));
  for (const auto& r : circ) CHECK(r.delta <= 1e-8);
  const auto sq = k_independence_check(discretize(make_unit_square(), 64), {0.5, 2.0},
                                       interior_points(make_unit_square(), 30, 0.1));
  for (const auto& r : sq) CHECK(r.delta >= 1e-2);
}
