// Acceptance driver: one PASS/FAIL line per criterion.
#include "mwgap/acceptance.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"mwgap acceptance suite"};
  std::vector<int> ids;
  int threads = 0;
  app.add_option("--criterion", ids, "criteria to run (default: all)")->check(CLI::Range(1, mwgap::kCriterionCount));
  app.add_option("--threads", threads)->check(CLI::NonNegativeNumber);
  CLI11_PARSE(app, argc, argv);

  if (ids.empty()) {
    for (int id = 1; id <= mwgap::kCriterionCount; ++id) ids.push_back(id);
  }
  bool all = true;
  for (int id : ids) {
    const mwgap::CriterionResult r = mwgap::run_criterion(id, threads);
    std::cout << mwgap::format_result(r) << '\n';
    for (const auto& d : r.details) std::cout << "        " << d << '\n';
    std::cout.flush();
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
