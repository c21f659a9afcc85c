#include <doctest.h>

#include "mabar/random.hpp"
#include "mabar/series.hpp"

using namespace mabar;

TEST_CASE("series basics") {
  const CoefficientSeries f({1.0, 2.0, 3.0});
  CHECK(f.degree() == 2);
  CHECK(f.coeff(1) == Complex(2.0));
  CHECK(f.coeff(7) == Complex(0.0));
  CHECK(f.evaluate(Complex(1.0)) == Complex(6.0));
  CHECK(CoefficientSeries({0.0, 0.0}).is_zero());
  CHECK(CoefficientSeries({1.0, 0.0}).degree() == 0);  // trailing zeros trimmed
}

TEST_CASE("division invariant: f = q d + r with deg r < deg d") {
  // monic divisors, the only kind the library divides by
  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    const CoefficientSeries f = random_polynomial(rng, rng.uniform_int(0, 14));
    std::vector<Complex> dc = random_polynomial(rng, rng.uniform_int(1, 5)).coeffs();
    dc.back() = Complex(1.0);
    const CoefficientSeries d(std::move(dc));
    const DivisionResult dr = divide(f, d);
    CHECK(dr.remainder.degree() < d.degree());
    const double scale = std::max({1.0, f.wiener_norm(), dr.quotient.wiener_norm() * d.wiener_norm()});
    CHECK(max_coeff_distance(dr.quotient * d + dr.remainder, f) <= 1e-12 * scale);
  }
}

TEST_CASE("jet agrees with evaluated derivatives") {
  Rng rng(11);
  const CoefficientSeries f = random_polynomial(rng, 9);
  const Complex z0(0.3, -0.2);
  const auto j = f.jet(z0, 4);
  CHECK(std::abs(j[0] - f.evaluate(z0)) <= 1e-13);
  CHECK(std::abs(j[1] - f.derivative().evaluate(z0)) <= 1e-13);
  CHECK(std::abs(j[2] - f.derivative().derivative().evaluate(z0) / 2.0) <= 1e-13);
  CHECK(std::abs(j[3] - f.derivative().derivative().derivative().evaluate(z0) / 6.0) <= 1e-13);
}

TEST_CASE("backward and forward shifts") {
  const CoefficientSeries f({1.0, 2.0, 3.0});
  CHECK(max_coeff_distance(backward_shift(f), CoefficientSeries({2.0, 3.0})) == 0.0);
  CHECK(max_coeff_distance(shift_up(f), CoefficientSeries({0.0, 1.0, 2.0, 3.0})) == 0.0);
  CHECK(backward_shift(shift_up(f)).coeffs() == f.coeffs());
}

TEST_CASE("h2 inner and norm") {
  const CoefficientSeries f({Complex(1.0, 1.0), 2.0});
  CHECK(f.h2_norm() == doctest::Approx(std::sqrt(6.0)).epsilon(1e-14));
  const CoefficientSeries g({Complex(0.0, 1.0)});
  // <f, g> = f_0 conj(g_0) = (1+i)(-i) = 1 - i
  CHECK(std::abs(h2_inner(f, g) - Complex(1.0, -1.0)) <= 1e-15);
}

TEST_CASE("boundary sup norm of z - 1 is 2") {
  const CoefficientSeries p({-1.0, 1.0});
  CHECK(boundary_sup_norm(p, 256) == doctest::Approx(2.0).epsilon(1e-10));
}
