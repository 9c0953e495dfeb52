#include <acceptance/acceptance.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <set>

// Prints one line per criterion. Exit status is 0 when the set of failing
// criteria equals the --expect-fail set.
int main(int argc, char** argv) {
  CLI::App app{"inclab acceptance battery"};
  std::vector<int> only;
  std::vector<int> expect_fail;
  app.add_option("--only", only, "criterion ids")->delimiter(',');
  app.add_option("--expect-fail", expect_fail, "criteria known to fail")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  const auto results = inclab::acceptance::run({only.begin(), only.end()}, std::cout);
  std::set<int> failed;
  std::set<int> ran;
  for (const auto& r : results) {
    ran.insert(r.id);
    if (!r.pass) failed.insert(r.id);
  }
  std::set<int> expected;
  for (int id : expect_fail) {
    if (ran.count(id) != 0) expected.insert(id);
  }
  std::cout << results.size() - failed.size() << "/" << results.size() << " criteria passed\n";
  for (int id : expected) {
    if (failed.count(id) != 0) std::cout << "expected failure: " << id << "\n";
  }
  for (int id : expected) {
    if (failed.count(id) == 0) std::cout << "unexpected pass: " << id << "\n";
  }
  for (int id : failed) {
    if (expected.count(id) == 0) std::cout << "unexpected failure: " << id << "\n";
  }
  return failed == expected ? 0 : 1;
}
