#ifndef MABAR_SIGMA_HPP
#define MABAR_SIGMA_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "mabar/series.hpp"

namespace mabar {

/// Matrix-free linear map between coordinate blocks; apply fills y (rows)
/// from x (cols), apply_adjoint fills x from y.
struct LinearMap {
  int rows = 0;
  int cols = 0;
  std::function<void(const std::vector<Complex>&, std::vector<Complex>&)> apply;
  std::function<void(const std::vector<Complex>&, std::vector<Complex>&)> apply_adjoint;
};

// Largest singular value by power iteration on M*M. Deterministic start
// (seeded), converges from below; tol is the relative change across sweeps.
double sigma_max_power(const LinearMap& map, double tol = 1e-13, int max_iter = 20000,
                       std::uint64_t seed = 0x6d61626172 /* "mabar" */);

// Extreme singular values of a dense column-major matrix (Eigen SVD inside).
struct SigmaExtremes {
  double max = 0.0;
  double min = 0.0;
};
SigmaExtremes sigma_extremes_dense(const std::vector<Complex>& column_major, int rows, int cols);

// Materializes a LinearMap into a dense column-major matrix (small sizes).
std::vector<Complex> materialize(const LinearMap& map);

}  // namespace mabar

#endif  // MABAR_SIGMA_HPP
