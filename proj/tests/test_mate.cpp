#include <doctest.h>

#include <cmath>

#include "mabar/mate.hpp"
#include "mabar/random.hpp"
#include "mabar/sections.hpp"

using namespace mabar;

TEST_CASE("sup norm on the circle") {
  CHECK(sup_norm_on_circle(RationalSymbol(CoefficientSeries({-1.0, 1.0}))) ==
        doctest::Approx(2.0).epsilon(1e-10));
  CHECK(sup_norm_on_circle(RationalSymbol::constant(1.0)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sup_norm_on_circle(RationalSymbol(CoefficientSeries({-1.0, 0.0, 1.0}))) ==
        doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("normalization into the ball") {
  const NormalizedSymbol s = normalize_nonextreme(RationalSymbol(CoefficientSeries({-1.0, 1.0})));
  CHECK(s.scale == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(max_coeff_distance(s.symbol.num(), CoefficientSeries({-0.25, 0.25})) <= 1e-10);
  const NormalizedSymbol c = normalize_nonextreme(RationalSymbol::constant(1.0));
  CHECK(c.scale == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("verdicts are scale invariant through the rational pathway") {
  // scaling a rational symbol does not move its circle zeros, so the reduced
  // class-A symbol (hence every membership/multiplier verdict) is unchanged
  Rng rng(107);
  for (int t = 0; t < 5; ++t) {
    const RationalSymbol raw = random_rational(rng, rng.uniform_int(1, 4), 0);
    const CircleZeroPolynomial target = random_class_a(rng, rng.uniform_int(1, 2));
    const RationalSymbol with_zeros(raw.num() * target.expansion());
    const NormalizedSymbol scaled = normalize_nonextreme(with_zeros);
    CHECK(reduce(with_zeros, 1e-6, 1e-4).same_zeros(reduce(scaled.symbol, 1e-6, 1e-4), 1e-4));
  }
}

TEST_CASE("range norms scale linearly under symbol scaling") {
  // || f ||_{(a/lambda)-bar} = lambda || f ||_{a-bar}, checked through the
  // raw banded solver on the scaled coefficients
  Rng rng(101);
  const CircleZeroPolynomial a = random_class_a(rng, 2);
  const double lambda = 2.0 * sup_norm_on_circle(a);
  const CoefficientSeries scaled = (1.0 / lambda) * a.expansion();
  for (int t = 0; t < 10; ++t) {
    const CoefficientSeries f = random_polynomial(rng, rng.uniform_int(0, 8));
    const double scaled_norm = solve_tbar_raw(scaled, f).h2_norm();
    CHECK(scaled_norm == doctest::Approx(lambda * range_norm(a, f)).epsilon(1e-11));
  }
  // the worked instance: || 1 ||_{((z-1)/4)-bar} = 4
  const CoefficientSeries quarter({-0.25, 0.25});
  CHECK(solve_tbar_raw(quarter, CoefficientSeries::one()).h2_norm() ==
        doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("mate of (1-z)/2 is (1+z)/2") {
  const RationalSymbol a(CoefficientSeries({0.5, -0.5}));
  const MateResult m = pythagorean_mate_full(a, 1024);
  CHECK(max_coeff_distance(m.b.trimmed(1e-12), CoefficientSeries({0.5, 0.5})) <= 1e-8);
  REQUIRE(m.contact.size() == 1);
  CHECK(angle_distance(m.contact[0].theta, kPi) <= 1e-6);
  const MateResidual res = mate_residual(a, CoefficientSeries({0.5, 0.5}), 1024);
  CHECK(res.residual <= 1e-12);  // exact hand identity on the grid
  CHECK(res.b0_positive);
}

TEST_CASE("mate of a constant") {
  const Complex c(0.3, 0.4);  // |c| = 0.5
  const CoefficientSeries b = pythagorean_mate(RationalSymbol::constant(c), 256);
  CHECK(max_coeff_distance(b.trimmed(1e-13), CoefficientSeries({std::sqrt(0.75)})) <= 1e-10);
  const MateResidual res =
      mate_residual(RationalSymbol::constant(c), CoefficientSeries({std::sqrt(0.75)}), 256);
  CHECK(res.residual <= 1e-15);
}

TEST_CASE("mate of (z-1)/4 satisfies the circle identity") {
  const RationalSymbol a(CoefficientSeries({-0.25, 0.25}));
  const MateResult m = pythagorean_mate_full(a);
  const MateResidual res = mate_residual(a, m.b);
  CHECK(res.residual <= 1e-8);
  CHECK(res.b0_positive);
  CHECK(m.tail_energy <= 1e-16);
}

TEST_CASE("mate with boundary contact from a perturbed double root") {
  // a = (1-z)(3-z)/8 attains |a| = 1 exactly at z = -1; the contact shows up
  // as a double root of the deflation polynomial near the arg seam
  const RationalSymbol a((1.0 / 8.0) *
                         (CoefficientSeries({1.0, -1.0}) * CoefficientSeries({3.0, -1.0})));
  const MateResult m = pythagorean_mate_full(a, 1024);
  REQUIRE(m.contact.size() == 1);
  CHECK(angle_distance(m.contact[0].theta, kPi) <= 1e-6);
  CHECK(m.contact[0].mult == 1);
  const MateResidual res = mate_residual(a, m.b, 1024);
  CHECK(res.residual <= 1e-8);
  CHECK(res.b0_positive);
}

TEST_CASE("mate error cases") {
  // ||a||_inf = 2 > 1
  CHECK_THROWS_AS(pythagorean_mate(RationalSymbol(CoefficientSeries({-1.0, 1.0}))),
                  std::domain_error);
  // |a| = 1 a.e. (extreme): a = z
  CHECK_THROWS_AS(pythagorean_mate(RationalSymbol(CoefficientSeries({0.0, 1.0}))),
                  std::domain_error);
  // grid must be a power of two and resolve the degree
  CHECK_THROWS(pythagorean_mate(RationalSymbol::constant(0.5), 100));
}

TEST_CASE("mate stability and outerness probes") {
  Rng rng(103);
  for (int t = 0; t < 4; ++t) {
    const RationalSymbol raw = random_rational(rng, rng.uniform_int(1, 4), rng.uniform_int(0, 1));
    const RationalSymbol a = normalize_nonextreme(raw).symbol;
    const CoefficientSeries b1 = pythagorean_mate(a, 2048);
    const CoefficientSeries b2 = pythagorean_mate(a, 4096);
    CHECK(max_coeff_distance(b1, b2) <= 1e-6);  // uniqueness proxy
    CHECK(std::abs(winding_number(b2.trimmed(1e-13), 0.999)) <= 0.01);  // no zeros inside
    const MateResidual res = mate_residual(a, b2, 4096);
    CHECK(res.residual <= 1e-8);
    CHECK(res.b0_positive);
  }
  // boundary-contact symbol: outerness with a zero on the circle itself
  const CoefficientSeries b = pythagorean_mate(RationalSymbol(CoefficientSeries({0.5, -0.5})), 512);
  CHECK(std::abs(winding_number(b.trimmed(1e-12), 0.999)) <= 0.01);
}

TEST_CASE("boundary grid sampling") {
  const RationalSymbol a(CoefficientSeries({0.0, 1.0}));  // a(z) = z
  const BoundaryGrid g = boundary_grid(a, 8);
  REQUIRE(g.size == 8);
  CHECK(std::abs(g.values[0] - Complex(1.0)) <= 1e-15);
  CHECK(std::abs(g.values[2] - Complex(0.0, 1.0)) <= 1e-15);
  for (const Complex& v : g.values) CHECK(std::isfinite(std::abs(v)));
}
