#include <doctest.h>

#include <cmath>

#include "mabar/random.hpp"
#include "mabar/shiftop.hpp"

using namespace mabar;

namespace {

const CircleZeroPolynomial kOne = CircleZeroPolynomial::one();
const CircleZeroPolynomial kZm1(std::vector<ZeroAngle>{{0.0, 1}});
const CircleZeroPolynomial kZ2m1(std::vector<ZeroAngle>{{0.0, 1}, {kPi, 1}});

}  // namespace

TEST_CASE("closed-form shift norms") {
  CHECK(shift_norm_closed(kZm1) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(shift_norm_closed(kOne) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(shift_norm_closed(kZ2m1) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("finite sections: hand cases and convergence") {
  // a = z-1, n = 0: the constant already attains sqrt(2); T_abar(Ba) = -1
  const ShiftReport r0 = shift_norm_sections(kZm1, {0});
  CHECK(r0.section_values[0].second == doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
  CHECK(max_coeff_distance(apply_T_abar(kZm1, backward_shift(kZm1.expansion())),
                           CoefficientSeries({-1.0})) <= 1e-15);

  const ShiftReport rid = shift_norm_sections(kOne, {0, 4, 16});
  for (const auto& [n, sigma] : rid.section_values)
    CHECK(sigma == doctest::Approx(1.0).epsilon(1e-12));

  const ShiftReport r2 = shift_norm_sections(kZ2m1, {256});
  CHECK(std::abs(r2.section_values[0].second - std::sqrt(2.0)) <= 1e-3);
}

TEST_CASE("section values are nondecreasing and bounded by the closed form") {
  Rng rng(71);
  const CircleZeroPolynomial a = random_class_a(rng, 3);
  const ShiftReport rep = shift_norm_sections(a, {0, 2, 8, 32, 128, 512});
  double prev = 0.0;
  for (const auto& [n, sigma] : rep.section_values) {
    CHECK(sigma >= prev - 1e-12);
    CHECK(sigma <= rep.closed_form + 1e-9);
    prev = sigma;
  }
  CHECK(rep.maximizer_residual <= 1e-10);
}

TEST_CASE("power iteration matches dense SVD on the shift map") {
  Rng rng(73);
  for (int t = 0; t < 4; ++t) {
    const CircleZeroPolynomial a = random_class_a(rng, rng.uniform_int(1, 4));
    const LinearMap map = shift_section_map(a, 40);
    const double power = sigma_max_power(map);
    const SigmaExtremes dense = sigma_extremes_dense(materialize(map), map.rows, map.cols);
    CHECK(power == doctest::Approx(dense.max).epsilon(1e-10));
  }
}

TEST_CASE("norm identity, hand-checked cases") {
  // f = 1: ||z||^2 = 2 and 1 + |<1, -1>|^2 = 2
  CHECK(shift_identity_residual(kZm1, CoefficientSeries::one()) <= 1e-13);
  // f = z-1 = a: S f = a z, ||a z|| = ||z|| = 1, cross term 0
  CHECK(shift_identity_residual(kZm1, kZm1.expansion()) <= 1e-13);
  CHECK(range_norm(kZm1, shift_up(kZm1.expansion())) == doctest::Approx(1.0).epsilon(1e-13));
  // f = 0
  CHECK(shift_identity_residual(kZm1, CoefficientSeries()) == 0.0);
}

TEST_CASE("norm identity on random polynomials") {
  Rng rng(79);
  for (int t = 0; t < 50; ++t) {
    const CircleZeroPolynomial a = random_class_a(rng, rng.uniform_int(0, 4));
    const CoefficientSeries f = random_polynomial(rng, rng.uniform_int(0, 10));
    CHECK(shift_identity_residual(a, f) <= 1e-10);
  }
}

TEST_CASE("scalar identities behind the closed form") {
  Rng rng(83);
  for (int t = 0; t < 20; ++t) {
    const CircleZeroPolynomial a = random_class_a(rng, rng.uniform_int(0, 5));
    CHECK(norm_one_identity_residual(a) <= 1e-12);
    CHECK(tbar_ba_identity_residual(a) <= 1e-12);
  }
}

TEST_CASE("adjoint formula on the interior block") {
  CHECK(adjoint_residual(kZm1, 8) <= 1e-12);
  CHECK(adjoint_residual(kOne, 4) == 0.0);  // Ba = 0, X* = S exactly
  CHECK(adjoint_residual(kZ2m1, 10) <= 1e-10);
  CHECK_THROWS(adjoint_residual(kZ2m1, 3));  // needs n >= N + 2
  Rng rng(89);
  for (int t = 0; t < 10; ++t) {
    const CircleZeroPolynomial a = random_class_a(rng, rng.uniform_int(1, 4));
    CHECK(adjoint_residual(a, 32) <= 1e-10);
  }
}

TEST_CASE("multiplication commutes with the shift on polynomials") {
  Rng rng(97);
  for (int t = 0; t < 20; ++t) {
    const CoefficientSeries phi = random_polynomial(rng, rng.uniform_int(0, 6));
    const CoefficientSeries f = random_polynomial(rng, rng.uniform_int(0, 6));
    CHECK(max_coeff_distance(shift_up(phi * f), phi * shift_up(f)) == 0.0);
  }
}
