#ifndef MABAR_SHIFTOP_HPP
#define MABAR_SHIFTOP_HPP

#include "mabar/sections.hpp"
#include "mabar/sigma.hpp"

namespace mabar {

/// Finite-section study of the shift S_{a-bar} f = z f on M(a-bar).
struct ShiftReport {
  double closed_form = 0.0;
  std::vector<std::pair<int, double>> section_values;  // (n, sigma_max), nondecreasing
  double maximizer_residual = 0.0;  // departure of T_{a-bar}(Ba) from attaining the norm
};

// ||S_{a-bar}|| = ||a||_{H^2} / |a(0)| (= ||a||_{H^2} for class A).
double shift_norm_closed(const CircleZeroPolynomial& a);

// The shift in preimage coordinates on P_n: g -> preimage(a, z T_{a-bar} g).
LinearMap shift_section_map(const CircleZeroPolynomial& a, int n);

// sigma_max of the section map for each n; values increase to the closed
// form since the polynomials are dense in M(a-bar).
ShiftReport shift_norm_sections(const CircleZeroPolynomial& a, const std::vector<int>& n_list);

// | ||z f||^2 - ( ||f||^2 + ||1||^2 |<f, T_{a-bar} B a>|^2 ) | in range norms.
double shift_identity_residual(const CircleZeroPolynomial& a, const CoefficientSeries& f);

// The two scalar identities behind the closed form.
double norm_one_identity_residual(const CircleZeroPolynomial& a);      // ||1|| = 1/|a(0)|
double tbar_ba_identity_residual(const CircleZeroPolynomial& a);       // ||T Ba||^2 = ||a||^2 - |a(0)|^2

// Interior-block deviation between the coordinate matrices of X* and of
// S + 1 (x) T_{a-bar} B a on P_n. In preimage coordinates the range inner
// product is Euclidean and X acts as the coefficient backward shift, so X*
// is the forward coordinate shift; boundary rows are truncation artifacts
// and the comparison stops at degree n - N - 1.
double adjoint_residual(const CircleZeroPolynomial& a, int n);

}  // namespace mabar

#endif  // MABAR_SHIFTOP_HPP
