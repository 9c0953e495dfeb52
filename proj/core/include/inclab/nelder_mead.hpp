#pragma once

#include <Eigen/Core>

#include <functional>

namespace inclab {

struct NelderMeadOptions {
  double initial_step = 0.05;
  int max_iterations = 5000;  // per run
  double x_tol = 1e-6;        // simplex diameter
  int restarts = 1;           // fresh simplices around the best point
};

struct NelderMeadResult {
  Eigen::VectorXd x;
  double f = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
};

using ScalarObjective = std::function<double(const Eigen::VectorXd&)>;

/// Called after every iteration with the running iteration count, the best
/// vertex and its value.
using IterationObserver = std::function<void(int, const Eigen::VectorXd&, double)>;

NelderMeadResult nelder_mead(const ScalarObjective& f, const Eigen::VectorXd& x0, const NelderMeadOptions& opts = {},
                             const IterationObserver& observer = {});

}  // namespace inclab
