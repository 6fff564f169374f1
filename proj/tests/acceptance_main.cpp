#include <CLI11.hpp>
#include <cstdio>
#include <iostream>

#include "prf/acceptance.hpp"

int main(int argc, char** argv) {
  prf::AcceptanceOptions opt;
  CLI::App app{"acceptance criteria"};
  app.add_flag("--extended", opt.extended, "sweep q <= 81 in criterion 1");
  app.add_option("--only", opt.only, "criteria to run")->delimiter(',');
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "progress on stderr");
  CLI11_PARSE(app, argc, argv);
  if (verbose) opt.progress = &std::cerr;

  int failed = 0;
  for (int id = 1; id <= prf::kCriterionCount; ++id) {
    if (!opt.only.empty() && std::find(opt.only.begin(), opt.only.end(), id) == opt.only.end()) continue;
    auto r = prf::run_criterion(id, opt);
    std::printf("[%s] criterion %d: %s (%.1f s) - %s\n", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds,
                r.detail.c_str());
    std::fflush(stdout);
    failed += !r.passed;
  }
  std::printf("%d criteria failed\n", failed);
  return failed ? 1 : 0;
}
