#ifndef MABAR_MULTIPLIERS_HPP
#define MABAR_MULTIPLIERS_HPP

#include <cstdint>

#include "mabar/rangespace.hpp"

namespace mabar {

enum class Decision { Yes, No, Unknown };

const char* to_string(Decision d);

/// Outcome of a multiplier test between two range spaces, with the rule that
/// decided it and enough witness material to re-verify the verdict.
struct MultiplierVerdict {
  Decision decision = Decision::Unknown;
  std::string rule;  // thm1.1 | thm1.2 | prop3.1 | cor-M(a,1) | cor-M(1,a) | sufficient-a2Hinf | none
  std::optional<CircleZeroPolynomial> quotient;     // h = a1/a2 or k = a2/a1
  std::optional<SingularFactorFunction> witness;    // h*phi (direct case) or psi = phi/k (reverse case)
  std::vector<ExponentEntry> exponent_table;
  std::optional<CoefficientSeries> interpolant;
  std::string obstruction;  // set when decision == No
};

// Dispatch on how the zero sets compare:
//   equal          -> member of M(a-bar) and bounded            [prop3.1]
//   a2 divides a1  -> member of M(a2-bar) and h*phi bounded     [thm1.1]
//   a1 divides a2  -> phi/k member of M(a1-bar) and bounded     [thm1.2]
//   incomparable   -> unknown, after trying the sufficient test phi in a2 Hinf.
// The corollary tags cor-M(a,1) / cor-M(1,a) mark the specializations where
// one side is H^2 itself.
MultiplierVerdict mult_check(const CircleZeroPolynomial& a1, const CircleZeroPolynomial& a2,
                             const SingularFactorFunction& phi,
                             double angle_tol = kDefaultAngleTol);

struct OntoVerdict {
  Decision decision = Decision::Unknown;  // Yes: onto multipliers exist
  std::string certificate;
};

// Onto multipliers: none when one symbol strictly divides the other (the
// quotient's reciprocal has circle poles, so it cannot sit in H^2); the
// Crofoot-type family 1/(1 - conj(lambda) a) when the symbols agree;
// undecided otherwise.
OntoVerdict onto_check(const CircleZeroPolynomial& a1, const CircleZeroPolynomial& a2);

struct CrofootReport {
  double sup_norm = 0.0;   // ||a||_inf
  double rho = 0.0;        // |lambda| ||a||_inf < 1
  int expansion_terms = 0; // geometric expansion truncation
  double tail_bound = 0.0; // range-norm bound on the dropped tail
  int trials = 0;
  double max_forward_ratio = 0.0;  // ||(1 - conj(l) a) f|| / ||f||
  double max_inverse_ratio = 0.0;  // ||f / (1 - conj(l) a)|| / ||f||
  double forward_bound = 0.0;      // 1 + rho
  double inverse_bound = 0.0;      // 1/(1 - rho)
};

// Samples random f in P_n and verifies both directions of the Crofoot family
// numerically: (1 - conj(lambda) a) f is a polynomial, and f/(1 - conj(l) a)
// is approximated by the truncated geometric expansion, with the tail bounded
// in range norm by rho^T |lambda| ||f|| / (1 - rho).
CrofootReport crofoot_verify(const CircleZeroPolynomial& a, Complex lambda, int n, int trials,
                             std::uint64_t seed = 1);

// sigma_max of g -> preimage_{a2}(phi * T_{a1-bar} g) on P_n: a nondecreasing
// lower bound for the multiplier norm M(a1-bar) -> M(a2-bar); growth in n is
// evidence of unboundedness.
double numeric_mult_norm(const CircleZeroPolynomial& a1, const CircleZeroPolynomial& a2,
                         const CoefficientSeries& phi, int n);

// The same map as a LinearMap (shared by the probe and the tests).
LinearMap mult_norm_map(const CircleZeroPolynomial& a1, const CircleZeroPolynomial& a2,
                        const CoefficientSeries& phi, int n);

}  // namespace mabar

#endif  // MABAR_MULTIPLIERS_HPP
