#pragma once

#include <functional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace inclab::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct Criterion {
  int id = 0;
  std::string title;
  std::function<CriterionResult()> run;
};

/// The full battery, in order.
const std::vector<Criterion>& criteria();

/// Runs the selected criteria (all if `only` is empty). Exceptions thrown by a
/// criterion count as failures. Each line is written to `out` as it finishes.
std::vector<CriterionResult> run(const std::set<int>& only, std::ostream& out);

std::string format_line(const CriterionResult& r);

}  // namespace inclab::acceptance
