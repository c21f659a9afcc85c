#ifndef MABAR_SECTIONS_HPP
#define MABAR_SECTIONS_HPP

#include "mabar/symbols.hpp"

namespace mabar {

// The co-analytic Toeplitz operator T_{a-bar} f = P_+(conj(a) f) in the
// monomial basis is banded upper triangular:
//
//   (T_{a-bar} f)(j) = sum_{m=0..N} conj(a_m) f(j+m),
//
// so the (n+1)-square finite section has entries (j,k) = conj(a_{k-j}) for
// 0 <= k-j <= N and is exact on polynomials of degree <= n. Since the
// diagonal is conj(a(0)) != 0, the section maps P_n onto P_n bijectively and
// back-substitution from the top degree down recovers THE unique H^2
// preimage (T_{a-bar} is injective for outer a).
//
// The raw routines below act on the symbol's plain coefficient list so the
// same kernels serve scaled and rational symbols; the typed wrappers take a
// class-A symbol.

CoefficientSeries apply_tbar_raw(const CoefficientSeries& symbol, const CoefficientSeries& f);
CoefficientSeries solve_tbar_raw(const CoefficientSeries& symbol, const CoefficientSeries& f);

// Adjoint-side kernels on fixed coordinate blocks of size n+1 (the adjoint of
// the section is the lower-triangular band a_{j-k}, i.e. truncated
// multiplication by a).
std::vector<Complex> apply_tbar_adjoint_raw(const CoefficientSeries& symbol,
                                            const std::vector<Complex>& w);
std::vector<Complex> solve_tbar_adjoint_raw(const CoefficientSeries& symbol,
                                            const std::vector<Complex>& v);

/// Finite section of T_{a-bar} on P_n. Immutable; storage is the band only.
class FiniteSection {
 public:
  FiniteSection(CircleZeroPolynomial symbol, int n);

  const CircleZeroPolynomial& symbol() const { return symbol_; }
  int n() const { return n_; }
  int size() const { return n_ + 1; }
  int bandwidth() const { return symbol_.degree(); }

  Complex entry(int j, int k) const;
  std::vector<Complex> apply(const std::vector<Complex>& g) const;
  // Row-major dense materialization, intended for n <= 64 (tests, SVD).
  std::vector<Complex> dense() const;

 private:
  CircleZeroPolynomial symbol_;
  int n_;
};

FiniteSection build_section(const CircleZeroPolynomial& a, int n);

// Exact T_{a-bar} f for polynomial f.
CoefficientSeries apply_T_abar(const CircleZeroPolynomial& a, const CoefficientSeries& f);

// The unique g in H^2 with T_{a-bar} g = f; deg g = deg f.
CoefficientSeries preimage(const CircleZeroPolynomial& a, const CoefficientSeries& f);

// ||f||_{a-bar} = ||preimage f||_{H^2} and the matching inner product.
double range_norm(const CircleZeroPolynomial& a, const CoefficientSeries& f);
Complex abar_inner(const CircleZeroPolynomial& a, const CoefficientSeries& f1,
                   const CoefficientSeries& f2);

/// A function f in M(a-bar) together with its unique preimage g.
struct RangeElement {
  CircleZeroPolynomial symbol;
  CoefficientSeries f;
  CoefficientSeries g;
  double norm = 0.0;
};
RangeElement make_range_element(const CircleZeroPolynomial& a, const CoefficientSeries& f);

// Reproducing kernel of M(a-bar): T_{a-bar}(a k_lambda) with a k_lambda
// truncated at degree n. The preimage-side truncation tail obeys
//
//   || tail ||_{H^2} <= W(a) |lambda|^{n+1-N} / sqrt(1 - |lambda|^2),
//
// W(a) = sum |a_m| (derivation: each dropped coefficient of a k_lambda is
// bounded by W(a) |lambda|^{j-N}), so |<f, kernel> - f(lambda)| is at most
// ||f||_{a-bar} times that bound.
CoefficientSeries kernel(const CircleZeroPolynomial& a, Complex lambda, int n);

// Smallest truncation degree with documented bound
// W(a) sup|a| |lambda|^{n-N+1}/sqrt(1-|lambda|^2) <= eps.
int kernel_truncation_degree(const CircleZeroPolynomial& a, Complex lambda, double eps);

// |<f, kernel(a, lambda, n)>_{a-bar} - f(lambda)|; n < 0 selects the
// truncation automatically for eps = 1e-9.
double reproducing_residual(const CircleZeroPolynomial& a, const CoefficientSeries& f,
                            Complex lambda, int n = -1);

}  // namespace mabar

#endif  // MABAR_SECTIONS_HPP
