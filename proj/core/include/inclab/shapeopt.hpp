#pragma once

#include "inclab/geometry.hpp"
#include "inclab/nelder_mead.hpp"

#include <Eigen/Core>

#include <string>
#include <utility>
#include <vector>

namespace inclab {

/// Minimize Tr M over area-normalized star shapes
/// r(t) = r0 (1 + sum_{m=2}^{max_mode} eps_m cos(m t) + delta_m sin(m t)).
/// Coefficients are packed as (eps_2, delta_2, eps_3, delta_3, ...).
struct OptProblem {
  double k = 3.0;
  double target_area = 3.14159265358979323846;
  int max_mode = 6;
  int n = 256;
  NelderMeadOptions optimizer{};
};

void validate(const OptProblem& p);

int coefficient_count(const OptProblem& p);

/// Star with the given coefficients, r0 chosen so the area equals `target_area`.
FourierStar star_from_coefficients(const Eigen::VectorXd& coeffs, int max_mode, double target_area);

struct Evaluation {
  double value = 0.0;
  bool valid = true;
  double area_error = 0.0;  // |measure - target| after renormalization
};

/// Tr M of the renormalized star; invalid shapes get 10x the disk value.
Evaluation evaluate_objective(const OptProblem& p, const Eigen::VectorXd& coeffs);
double objective(const OptProblem& p, const Eigen::VectorXd& coeffs);

struct OptRecord {
  int iteration = 0;
  int evaluations = 0;
  Eigen::VectorXd coefficients;
  double objective = 0.0;
};

struct OptTrace {
  std::vector<OptRecord> history;  // best point after each iteration
  Eigen::VectorXd initial_coefficients;
  Eigen::VectorXd final_coefficients;
  FourierStar initial_shape;
  FourierStar final_shape;
  double final_objective = 0.0;
  double target = 0.0;  // minimal_trace_target(k, area, 2)
  double gap = 0.0;     // final_objective - target
  double min_evaluated = 0.0;
  double max_area_error = 0.0;
  int evaluations = 0;
  int invalid_evaluations = 0;
  bool converged = false;
};

OptTrace minimize(const OptProblem& p, const Eigen::VectorXd& initial);

struct GapRow {
  std::string name;
  double trace = 0.0;
  Eigen::VectorXd eigenvalues;
  double slack1 = 0.0;
  double slack2 = 0.0;
  bool saturated2 = false;
};

std::vector<GapRow> bound_gap_scan(const std::vector<std::pair<std::string, ShapeSpec>>& shapes, double k);

/// SVG overlay of the initial shape, the final shape and the disk of the same
/// area; viewBox is the bounding box scaled by 1.2 about its centre.
std::string svg_overlay(const FourierStar& initial, const FourierStar& final_shape, double disk_radius);

}  // namespace inclab
