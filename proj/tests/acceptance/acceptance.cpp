// Runs the acceptance criteria, one PASS/FAIL line each. Exit status 1 if any fails.

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <iostream>

#include "locscale/errors.hpp"
#include "locscale/verify.hpp"

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::string criterion;
  app.add_option("--criterion", criterion, "Run a single criterion (c01..c13); default runs all");
  CLI11_PARSE(app, argc, argv);

  std::vector<std::string> ids;
  try {
    ids = criterion.empty() ? locscale::verify::criterion_ids() : locscale::verify::suite_members(criterion);
  } catch (const locscale::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  int failed = 0;
  for (const auto& id : ids) {
    const auto start = std::chrono::steady_clock::now();
    const auto r = locscale::verify::run_criterion(id);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s  %s  (%.2fs)\n    %s\n", r.passed ? "PASS" : "FAIL", r.id.c_str(), r.title.c_str(), secs,
                r.detail.c_str());
    if (!r.passed) ++failed;
  }
  std::printf("%zu/%zu criteria pass\n", ids.size() - failed, ids.size());
  return failed ? 1 : 0;
}
