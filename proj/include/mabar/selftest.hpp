#ifndef MABAR_SELFTEST_HPP
#define MABAR_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace mabar {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// The acceptance suite: ten desk-scale checks covering the shift norm and
/// its proof identities, the adjoint formula, reproducing kernels, the
/// direct-sum decomposition, the class-A isometry, the multiplier and onto
/// theorems, the Pythagorean mate, and the coefficient-decay probes. All
/// tolerances are fixed here. `only` filters criteria by substring;
/// `tolerance_scale` multiplies the residual thresholds (a tampered scale
/// like 1e-10 demonstrates that failures are caught and listed).
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 20260809,
                                            const std::string& only = "",
                                            double tolerance_scale = 1.0);

}  // namespace mabar

#endif  // MABAR_SELFTEST_HPP
