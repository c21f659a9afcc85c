#include "mabar/random.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mabar {

std::uint64_t Rng::next_u64() {
  state_ += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

int Rng::uniform_int(int lo, int hi) {
  return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
}

Complex Rng::unit_complex() { return std::polar(1.0, uniform(0.0, kTwoPi)); }

Complex Rng::gaussian_like() {
  double re = 0.0, im = 0.0;
  for (int k = 0; k < 4; ++k) {
    re += uniform() - 0.5;
    im += uniform() - 0.5;
  }
  return Complex(re, im);
}

CircleZeroPolynomial random_class_a(Rng& rng, int total_degree, double min_separation,
                                    int max_mult) {
  if (total_degree < 0) throw std::invalid_argument("random_class_a: negative degree");
  std::vector<ZeroAngle> zeros;
  int remaining = total_degree;
  int guard = 0;
  while (remaining > 0) {
    const double theta = rng.uniform(0.0, kTwoPi);
    bool clear = true;
    for (const ZeroAngle& z : zeros)
      if (angle_distance(z.theta, theta) < min_separation) clear = false;
    if (!clear) {
      if (++guard > 1000) throw std::runtime_error("random_class_a: cannot separate angles");
      continue;
    }
    const int mult = std::min(remaining, rng.uniform_int(1, max_mult));
    zeros.push_back({theta, mult});
    remaining -= mult;
  }
  return CircleZeroPolynomial(std::move(zeros));
}

CoefficientSeries random_polynomial(Rng& rng, int degree, double scale) {
  std::vector<Complex> c(static_cast<std::size_t>(std::max(degree, 0)) + 1);
  for (Complex& x : c) x = scale * rng.gaussian_like();
  // keep the stated degree: retry a vanishing leading coefficient
  while (c.back() == Complex(0.0)) c.back() = scale * rng.gaussian_like();
  return CoefficientSeries(std::move(c));
}

RationalSymbol random_rational(Rng& rng, int num_degree, int den_degree) {
  const CoefficientSeries num = random_polynomial(rng, num_degree);
  CoefficientSeries den = CoefficientSeries::one();
  for (int k = 0; k < den_degree; ++k) {
    const Complex root = rng.uniform(1.3, 3.0) * rng.unit_complex();
    den = den * CoefficientSeries({-root, Complex(1.0)});
  }
  return RationalSymbol(num, den);
}

}  // namespace mabar
