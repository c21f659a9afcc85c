#ifndef MABAR_RANDOM_HPP
#define MABAR_RANDOM_HPP

#include <cstdint>

#include "mabar/symbols.hpp"

namespace mabar {

/// splitmix64-backed generator; identical seeds give identical corpora on
/// every platform (no standard-library distributions involved).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  double uniform();                      // [0, 1)
  double uniform(double lo, double hi);
  int uniform_int(int lo, int hi);       // inclusive
  Complex unit_complex();                // uniform on the circle
  Complex gaussian_like();               // sum-of-uniforms proxy, mean 0

 private:
  std::uint64_t state_;
};

// Class-A symbol with N zeros counted with multiplicity, angles separated by
// at least min_separation, multiplicities up to max_mult.
CircleZeroPolynomial random_class_a(Rng& rng, int total_degree, double min_separation = 0.3,
                                    int max_mult = 2);

CoefficientSeries random_polynomial(Rng& rng, int degree, double scale = 1.0);

// Rational symbol analytic on a neighborhood of the closed disk: random
// numerator, denominator roots placed in |z| in [1.3, 3].
RationalSymbol random_rational(Rng& rng, int num_degree, int den_degree);

}  // namespace mabar

#endif  // MABAR_RANDOM_HPP
