// Acceptance suite runner: one pass/fail line per criterion, nonzero exit on
// any failure. The criteria and their tolerances live in the library
// (selftest.cpp) and are shared with the `mabar selftest` subcommand.

#include <cstdio>
#include <string>

#include "mabar/selftest.hpp"

int main(int argc, char** argv) {
  const std::string only = argc > 1 ? argv[1] : "";
  const auto results = mabar::run_acceptance(20260809, only);
  int failures = 0;
  for (const auto& r : results) {
    std::printf("%s %2d %-22s (%.2f s)\n", r.pass ? "PASS" : "FAIL", r.index, r.name.c_str(),
                r.seconds);
    if (!r.pass) {
      std::printf("     %s\n", r.detail.c_str());
      ++failures;
    }
  }
  std::printf("%zu criteria, %d failed\n", results.size(), failures);
  return failures == 0 ? 0 : 1;
}
