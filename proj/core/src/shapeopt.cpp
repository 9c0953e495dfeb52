#include "inclab/shapeopt.hpp"

#include "inclab/errors.hpp"
#include "inclab/polarization.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>

namespace inclab {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

void validate(const OptProblem& p) {
  if (!(p.k > 1.0) || !std::isfinite(p.k)) throw DomainError("shape optimization needs k > 1");
  if (!(p.target_area > 0.0)) throw DomainError("target area must be positive");
  if (p.max_mode < 2) throw DomainError("mode cutoff must be at least 2");
  if (p.n < 128) throw ResolutionError("shape optimization needs n >= 128");
}

int coefficient_count(const OptProblem& p) { return 2 * (p.max_mode - 1); }

FourierStar star_from_coefficients(const Eigen::VectorXd& coeffs, int max_mode, double target_area) {
  if (coeffs.size() != 2 * (max_mode - 1)) throw std::invalid_argument("star_from_coefficients: wrong length");
  FourierStar s;
  s.r0 = 1.0;
  for (int m = 2; m <= max_mode; ++m) {
    s.modes.push_back({m, coeffs(2 * (m - 2)), coeffs(2 * (m - 2) + 1)});
  }
  validate(ShapeSpec{s});
  s.r0 = std::sqrt(target_area / measure(s));
  return s;
}

Evaluation evaluate_objective(const OptProblem& p, const Eigen::VectorXd& coeffs) {
  Evaluation ev;
  try {
    const FourierStar s = star_from_coefficients(coeffs, p.max_mode, p.target_area);
    ev.area_error = std::abs(measure(s) - p.target_area);
    ev.value = polarization_tensor(discretize(s, p.n), p.k).M.trace();
  } catch (const InvalidShapeError&) {
    ev.valid = false;
    ev.value = 10.0 * minimal_trace_target(p.k, p.target_area, 2);
  }
  return ev;
}

double objective(const OptProblem& p, const Eigen::VectorXd& coeffs) { return evaluate_objective(p, coeffs).value; }

OptTrace minimize(const OptProblem& p, const Eigen::VectorXd& initial) {
  validate(p);
  OptTrace trace;
  trace.initial_coefficients = initial;
  trace.initial_shape = star_from_coefficients(initial, p.max_mode, p.target_area);
  trace.target = minimal_trace_target(p.k, p.target_area, 2);
  trace.min_evaluated = std::numeric_limits<double>::infinity();

  auto f = [&](const Eigen::VectorXd& c) {
    const Evaluation ev = evaluate_objective(p, c);
    ++trace.evaluations;
    if (!ev.valid) ++trace.invalid_evaluations;
    trace.min_evaluated = std::min(trace.min_evaluated, ev.value);
    trace.max_area_error = std::max(trace.max_area_error, ev.area_error);
    return ev.value;
  };
  auto observe = [&](int it, const Eigen::VectorXd& best, double fbest) {
    trace.history.push_back({it, trace.evaluations, best, fbest});
  };

  const NelderMeadResult res = nelder_mead(f, initial, p.optimizer, observe);
  trace.final_coefficients = res.x;
  trace.final_objective = res.f;
  trace.final_shape = star_from_coefficients(res.x, p.max_mode, p.target_area);
  trace.gap = res.f - trace.target;
  trace.converged = res.converged;
  return trace;
}

std::vector<GapRow> bound_gap_scan(const std::vector<std::pair<std::string, ShapeSpec>>& shapes, double k) {
  std::vector<GapRow> rows;
  for (const auto& [name, shape] : shapes) {
    if (dimension(shape) != 2) throw DomainError("bound_gap_scan: only 2D shapes are supported");
    const PolarizationTensor pt = polarization_tensor(discretize(shape, default_resolution(shape)), k);
    const BoundReport b = hs_bounds(pt);
    GapRow row;
    row.name = name;
    row.trace = b.tr_M;
    row.eigenvalues = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(pt.M).eigenvalues();
    row.slack1 = b.slack1;
    row.slack2 = b.slack2;
    row.saturated2 = b.saturated2;
    rows.push_back(row);
  }
  return rows;
}

std::string svg_overlay(const FourierStar& initial, const FourierStar& final_shape, double disk_radius) {
  constexpr int kSamples = 360;
  auto outline = [&](const FourierStar& s) {
    std::vector<Eigen::Vector2d> pts;
    for (int i = 0; i < kSamples; ++i) {
      const double t = 2.0 * kPi * i / kSamples;
      pts.emplace_back(s.radius(t) * std::cos(t), s.radius(t) * std::sin(t));
    }
    return pts;
  };
  const auto a = outline(initial);
  const auto b = outline(final_shape);
  Eigen::Vector2d lo(-disk_radius, -disk_radius);
  Eigen::Vector2d hi(disk_radius, disk_radius);
  for (const auto* pts : {&a, &b}) {
    for (const auto& q : *pts) {
      lo = lo.cwiseMin(q);
      hi = hi.cwiseMax(q);
    }
  }
  const Eigen::Vector2d mid = 0.5 * (lo + hi);
  const Eigen::Vector2d half = 0.6 * (hi - lo);
  lo = mid - half;
  hi = mid + half;

  // SVG y points down; flip so the picture matches the math orientation.
  auto path = [&](const std::vector<Eigen::Vector2d>& pts) {
    std::ostringstream os;
    char buf[64];
    for (std::size_t i = 0; i < pts.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%s%.6f,%.6f ", i == 0 ? "M" : "L", pts[i].x(), -pts[i].y());
      os << buf;
    }
    os << "Z";
    return os.str();
  };
  const double stroke = 0.004 * (hi - lo).maxCoeff();
  char head[256];
  std::snprintf(head, sizeof head,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"%.6f %.6f %.6f %.6f\">\n", lo.x(), -hi.y(),
                hi.x() - lo.x(), hi.y() - lo.y());
  std::ostringstream svg;
  svg << head;
  char circle[256];
  std::snprintf(circle, sizeof circle,
                "  <circle cx=\"0\" cy=\"0\" r=\"%.6f\" fill=\"none\" stroke=\"#888888\" stroke-width=\"%.6f\" "
                "stroke-dasharray=\"%.6f\"/>\n",
                disk_radius, stroke, 4.0 * stroke);
  svg << circle;
  svg << "  <path d=\"" << path(a) << "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"" << stroke << "\"/>\n";
  svg << "  <path d=\"" << path(b) << "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"" << stroke << "\"/>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace inclab
