// Acceptance run: one line per criterion, exit status 0 iff all pass.

#include <iostream>

#include "nakayama/certify.hpp"

int main() {
  nakayama::CheckConfig cfg;
  bool all = true;
  nakayama::run_checks(cfg, [&](const nakayama::CheckResult& r) {
    all = all && r.passed;
    std::cout << nakayama::summary_line(r) << std::endl;
  });
  std::cout << (all ? "ALL PASS" : "SOME CRITERIA FAILED") << std::endl;
  return all ? 0 : 1;
}
