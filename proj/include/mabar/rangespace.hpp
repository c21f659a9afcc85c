#ifndef MABAR_RANGESPACE_HPP
#define MABAR_RANGESPACE_HPP

#include "mabar/sections.hpp"
#include "mabar/sigma.hpp"

namespace mabar {

/// f = a * f_tilde + p with deg p <= N-1, the direct-sum splitting of M(a-bar)
/// into a H^2 and the low-degree polynomials. p is the unique interpolant of
/// f at the zeros of a to their multiplicities.
struct Decomposition {
  CoefficientSeries f_tilde;
  CoefficientSeries p;
  double division_residual = 0.0;     // ||f - (a f_tilde + p)|| after the exact division
  double interpolant_condition = 1.0; // condition of the confluent Vandermonde system
};

// Hermite route: p by confluent divided differences at the angle-sorted
// zeros, then f_tilde = (f - p)/a by exact polynomial division.
Decomposition decompose(const CircleZeroPolynomial& a, const CoefficientSeries& f);

// Independent route: p = f mod a via Euclidean division (solves f - p == 0
// mod a with deg p < N directly). Used to cross-check uniqueness.
Decomposition decompose_by_division(const CircleZeroPolynomial& a, const CoefficientSeries& f);

struct ExponentEntry {
  double theta = 0.0;
  int zero_mult = 0;      // multiplicity of a at this angle (0: not a zero of a)
  double alpha = 0.0;     // exponent of phi at this angle
  double required = 0.0;  // threshold alpha must exceed (when not analytic)
  bool analytic = false;  // phi analytic at the point (nonnegative integer exponent)
  bool ok = false;
};

struct MembershipResult {
  bool member = false;
  std::vector<ExponentEntry> table;
  // Present when phi is analytic at every zero of a: the interpolant part p.
  std::optional<CoefficientSeries> interpolant;
  std::string obstruction;  // first failing entry, human-readable
};

// phi in M(a-bar) = a H^2 + P_{N-1}: at a zero of multiplicity m either phi
// is analytic there or its exponent alpha satisfies alpha > m - 1/2; at
// angles away from the zeros of a, alpha > -1/2 (the H^2 rule).
MembershipResult membership(const CircleZeroPolynomial& a, const SingularFactorFunction& phi,
                            double angle_tol = kDefaultAngleTol);

// Extreme singular values of f -> a f from (P_n, H^2) to (M(a-bar), range
// norm), in preimage coordinates. For class-A symbols this is an exact
// isometry: preimage(a, a f) = a(0) z^N f.
SigmaExtremes equivalence_bounds(const CircleZeroPolynomial& a, int n);

// Smallest principal angle (radians) between a P_n and P_{N-1} in the range
// inner product, computed in preimage coordinates. Reported only; the sum is
// direct but not orthogonal.
double direct_sum_angle(const CircleZeroPolynomial& a, int n);

}  // namespace mabar

#endif  // MABAR_RANGESPACE_HPP
