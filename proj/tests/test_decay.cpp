#include <doctest.h>

#include <cmath>

#include "mabar/decay.hpp"

using namespace mabar;

TEST_CASE("class-F sampler") {
  const CoefficientSeries s = sample_class_F(1.0, 3);
  CHECK(std::abs(s.coeff(0) - Complex(1.0)) == 0.0);
  CHECK(std::abs(s.coeff(1) - Complex(std::exp(-1.0))) <= 1e-16);
  CHECK(std::abs(s.coeff(2) - Complex(std::exp(-std::sqrt(2.0)))) <= 1e-16);
  CHECK(std::abs(s.coeff(3) - Complex(std::exp(-std::sqrt(3.0)))) <= 1e-16);
  // large c: everything after the constant is negligible
  const CoefficientSeries spike = sample_class_F(50.0, 4);
  for (int k = 1; k <= 4; ++k) CHECK(std::abs(spike.coeff(k)) <= 1e-20);
  CHECK_THROWS(sample_class_F(0.0, 4));
}

TEST_CASE("fit roundtrip recovers the rate") {
  for (double c : {0.5, 1.0, 2.0}) {
    const DecayFit fit = decay_fit(sample_class_F(c, 4096), {64, 4096});
    CHECK(std::abs(fit.c - c) <= 0.02 * c);
    CHECK(fit.residual <= 1e-10);  // the synthetic data is exactly on the line
    CHECK(in_decay_class(fit));
  }
}

TEST_CASE("geometric decay is tagged, with a poor sqrt fit") {
  std::vector<Complex> c(513);
  for (int k = 0; k <= 512; ++k) c[static_cast<std::size_t>(k)] = std::pow(2.0, -double(k));
  const DecayFit fit = decay_fit(CoefficientSeries(std::move(c)), {64, 512});
  CHECK(fit.geometric);
  CHECK(fit.geometric_rate == doctest::Approx(std::log(2.0)).epsilon(1e-9));
  CHECK(fit.residual > 1.0);  // oracle: RMS of the sqrt-model fit is ~10.7 here
  CHECK(in_decay_class(fit)); // geometric decay is faster than any sqrt rate
}

TEST_CASE("polynomial decay: fitted rate shrinks with the window") {
  // oracle (least squares on log(1/(n^2+1)) against sqrt n):
  // window [64, 4096] gives c = 0.11427, rms = 0.40346.
  std::vector<Complex> c(65537);
  for (std::size_t k = 0; k < c.size(); ++k)
    c[k] = 1.0 / (static_cast<double>(k) * static_cast<double>(k) + 1.0);
  const CoefficientSeries psi(std::move(c));
  const DecayFit f1 = decay_fit(psi, {64, 4096});
  CHECK(f1.c == doctest::Approx(0.11427253890678989).epsilon(1e-6));
  CHECK(f1.residual == doctest::Approx(0.4034641144709841).epsilon(1e-6));
  // no positive rate persists: the fit decays toward zero as the window grows
  const DecayFit f2 = decay_fit(psi, {256, 16384});
  const DecayFit f3 = decay_fit(psi, {1024, 65536});
  CHECK(f2.c < f1.c);
  CHECK(f3.c < f2.c);
  CHECK(f3.c < 0.04);
  CHECK_FALSE(f1.geometric);
}

TEST_CASE("fit input validation") {
  CHECK_THROWS(decay_fit(sample_class_F(1.0, 100), {0, 400}));  // window beyond range
  // fewer than 8 nonzero coefficients
  CoefficientSeries sparse({1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0});
  CHECK_THROWS(decay_fit(sparse, {0, 8}));
}

TEST_CASE("universal probe: constants and geometric samples stay flat") {
  const std::vector<CircleZeroPolynomial> symbols{
      CircleZeroPolynomial(std::vector<ZeroAngle>{{0.0, 1}}),
      CircleZeroPolynomial(std::vector<ZeroAngle>{{0.0, 1}, {kPi, 1}})};
  // psi = 1: every section norm is exactly 1
  const auto rows = universal_mult_probe(CoefficientSeries::one(), symbols, {16, 64});
  for (const ProbeRow& r : rows) {
    CHECK(r.sigma == doctest::Approx(1.0).epsilon(1e-11));
    CHECK_FALSE(r.flagged);
  }
  // psi with 2^{-n} coefficients is analytic across the boundary: flat table
  std::vector<Complex> c(129);
  for (int k = 0; k <= 128; ++k) c[static_cast<std::size_t>(k)] = std::pow(2.0, -double(k));
  const auto rows2 = universal_mult_probe(CoefficientSeries(std::move(c)), symbols, {64, 192});
  for (const ProbeRow& r : rows2) CHECK_FALSE(r.flagged);
}

TEST_CASE("probe entries do not grow when the decay rate increases") {
  const std::vector<CircleZeroPolynomial> symbols{
      CircleZeroPolynomial(std::vector<ZeroAngle>{{0.0, 1}}),
      CircleZeroPolynomial(std::vector<ZeroAngle>{{0.0, 2}})};
  const std::vector<int> levels{32, 96};
  const auto slow = universal_mult_probe(sample_class_F(0.5, 256), symbols, levels);
  const auto mid = universal_mult_probe(sample_class_F(1.0, 256), symbols, levels);
  const auto fast = universal_mult_probe(sample_class_F(2.0, 256), symbols, levels);
  for (std::size_t i = 0; i < slow.size(); ++i) {
    CHECK(mid[i].sigma <= slow[i].sigma + 1e-10);
    CHECK(fast[i].sigma <= mid[i].sigma + 1e-10);
  }
}
