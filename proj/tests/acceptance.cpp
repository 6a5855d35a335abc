// Acceptance batteries: one PASS/FAIL line per criterion.
#include <cstdio>

#include <CLI11.hpp>

#include "infgon/verify.hpp"

int main(int argc, char** argv) {
  CLI::App app{"acceptance batteries"};
  bool quick = false;
  int only = 0;
  app.add_flag("--quick", quick, "smaller enumeration bounds");
  app.add_option("--only", only, "run a single criterion")->check(CLI::Range(1, infgon::kCriterionCount));
  CLI11_PARSE(app, argc, argv);

  const auto level = quick ? infgon::SuiteLevel::kQuick : infgon::SuiteLevel::kDesk;
  int failed = 0;
  for (int id = 1; id <= infgon::kCriterionCount; ++id) {
    if (only != 0 && id != only) continue;
    const infgon::CriterionResult r = infgon::run_criterion(id, level);
    failed += r.pass ? 0 : 1;
    std::printf("%s C%-2d %-42s checks=%zu failures=%zu %.2fs  %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.checked, r.failures, r.seconds, r.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
