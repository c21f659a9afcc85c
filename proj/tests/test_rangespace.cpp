#include <doctest.h>

#include <cmath>

#include "mabar/random.hpp"
#include "mabar/rangespace.hpp"

using namespace mabar;

namespace {

const CircleZeroPolynomial kZm1(std::vector<ZeroAngle>{{0.0, 1}});
const CircleZeroPolynomial kZ2m1(std::vector<ZeroAngle>{{0.0, 1}, {kPi, 1}});
const CircleZeroPolynomial kOnePlusZ(std::vector<ZeroAngle>{{kPi, 1}});

}  // namespace

TEST_CASE("decompose hand cases") {
  // a = z-1, f = z: p = 1 (interpolates f(1) = 1), fTilde = 1
  Decomposition d = decompose(kZm1, CoefficientSeries::monomial(1));
  CHECK(max_coeff_distance(d.p, CoefficientSeries::one()) <= 1e-13);
  CHECK(max_coeff_distance(d.f_tilde, CoefficientSeries::one()) <= 1e-13);

  // constants interpolate themselves
  d = decompose(kZm1, CoefficientSeries::one());
  CHECK(max_coeff_distance(d.p, CoefficientSeries::one()) <= 1e-13);
  CHECK(d.f_tilde.is_zero());

  // a = z^2-1, f = z^2: p(1) = p(-1) = 1 forces p = 1; (z^2-1)/(z^2-1) = 1
  d = decompose(kZ2m1, CoefficientSeries::monomial(2));
  CHECK(max_coeff_distance(d.p, CoefficientSeries::one()) <= 1e-13);
  CHECK(max_coeff_distance(d.f_tilde, CoefficientSeries::one()) <= 1e-13);

  // degenerate N = 0: p = 0, fTilde = f
  d = decompose(CircleZeroPolynomial::one(), CoefficientSeries({2.0, 3.0}));
  CHECK(d.p.is_zero());
  CHECK(max_coeff_distance(d.f_tilde, CoefficientSeries({2.0, 3.0})) == 0.0);

  // f = 0 -> (0, 0)
  d = decompose(kZm1, CoefficientSeries());
  CHECK(d.p.is_zero());
  CHECK(d.f_tilde.is_zero());
}

TEST_CASE("decompose: uniqueness, idempotence, two routes agree") {
  Rng rng(47);
  for (int t = 0; t < 80; ++t) {
    const CircleZeroPolynomial a = random_class_a(rng, rng.uniform_int(1, 6));
    const CoefficientSeries f = random_polynomial(rng, rng.uniform_int(0, 20));
    const Decomposition d1 = decompose(a, f);
    const Decomposition d2 = decompose_by_division(a, f);
    CHECK(d1.p.degree() <= a.degree() - 1);
    CHECK(max_coeff_distance(a.expansion() * d1.f_tilde + d1.p, f) <=
          1e-10 * std::max(1.0, f.wiener_norm()));
    CHECK(max_coeff_distance(d1.p, d2.p) <= 1e-10 * std::max(1.0, f.wiener_norm()));
    // idempotence: decomposing a*fTilde + p returns the same split
    const Decomposition again = decompose(a, a.expansion() * d1.f_tilde + d1.p);
    CHECK(max_coeff_distance(again.p, d1.p) <= 1e-9 * std::max(1.0, f.wiener_norm()));
  }
}

TEST_CASE("membership: the unbounded-multiplier example, both symbols") {
  // phi = (1+z)^{1/2+eps} (1-z)^{-1/2+eps}, eps = 0.1
  const SingularFactorFunction phi(RationalSymbol::constant(1.0), {{kPi, 0.6}, {0.0, -0.4}});
  const MembershipResult in_small = membership(kOnePlusZ, phi);
  CHECK(in_small.member);  // 0.6 > 1/2 at -1, -0.4 > -1/2 away from the zero
  const MembershipResult in_big = membership(kZ2m1, phi);
  CHECK_FALSE(in_big.member);  // at +1 the rule needs alpha > 1/2
  CHECK(in_big.obstruction.find("angle 0") != std::string::npos);
}

TEST_CASE("membership: polynomials belong to every range space") {
  Rng rng(53);
  for (int t = 0; t < 20; ++t) {
    const CircleZeroPolynomial a = random_class_a(rng, rng.uniform_int(1, 4));
    const CoefficientSeries f = random_polynomial(rng, rng.uniform_int(0, 6));
    const SingularFactorFunction phi(f);
    const MembershipResult m = membership(a, phi);
    CHECK(m.member);
    REQUIRE(m.interpolant.has_value());
    // the witness interpolant matches the decomposition of the polynomial
    const Decomposition d = decompose(a, f);
    CHECK(max_coeff_distance(*m.interpolant, d.p) <= 1e-8 * std::max(1.0, f.wiener_norm()));
  }
}

TEST_CASE("membership respects multiplication by the symbol") {
  // (1-z)^{-0.4} fails in M((z-1)-bar) but (z-1)(1-z)^{-0.4} passes
  const SingularFactorFunction phi(RationalSymbol::constant(1.0), {{0.0, -0.4}});
  CHECK_FALSE(membership(kZm1, phi).member);
  CHECK(membership(kZm1, phi.times_circle(kZm1)).member);
  // h2 membership is necessary
  Rng rng(59);
  for (int t = 0; t < 30; ++t) {
    std::vector<CircleFactor> factors;
    for (int k = rng.uniform_int(0, 2); k > 0; --k)
      factors.push_back({rng.uniform(0.0, kTwoPi), rng.uniform(-1.5, 1.5)});
    const SingularFactorFunction psi(RationalSymbol::constant(1.0), factors);
    const CircleZeroPolynomial a = random_class_a(rng, rng.uniform_int(1, 3));
    if (membership(a, psi).member) CHECK(h2_membership(psi));
  }
}

TEST_CASE("equivalence bounds: multiplication by a is an exact isometry") {
  const SigmaExtremes id = equivalence_bounds(CircleZeroPolynomial::one(), 8);
  CHECK(id.max == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(id.min == doctest::Approx(1.0).epsilon(1e-12));
  for (const CircleZeroPolynomial& a : {kZm1, kZ2m1}) {
    const SigmaExtremes se = equivalence_bounds(a, 16);
    CHECK(std::abs(se.max - 1.0) <= 1e-10);
    CHECK(std::abs(se.min - 1.0) <= 1e-10);
  }
  // |twist coefficient| = |a(0)| = 1
  CHECK(std::abs(std::abs(kZ2m1.constant_term()) - 1.0) <= 4e-16);
}

TEST_CASE("direct-sum angle is reported in (0, pi/2]") {
  const double angle = direct_sum_angle(kZm1, 8);
  CHECK(angle > 0.0);
  CHECK(angle <= kPi / 2.0 + 1e-12);
  const double angle2 = direct_sum_angle(kZ2m1, 12);
  CHECK(angle2 > 0.0);
  CHECK(angle2 <= kPi / 2.0 + 1e-12);
}
