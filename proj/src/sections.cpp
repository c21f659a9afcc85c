#include "mabar/sections.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mabar {

CoefficientSeries apply_tbar_raw(const CoefficientSeries& symbol, const CoefficientSeries& f) {
  if (f.is_zero()) return CoefficientSeries();
  const int d = f.degree();
  const int band = symbol.degree();
  std::vector<Complex> out(static_cast<std::size_t>(d) + 1, Complex(0.0));
  for (int j = 0; j <= d; ++j) {
    Complex s(0.0);
    const int top = std::min(band, d - j);
    for (int m = 0; m <= top; ++m) s += std::conj(symbol.coeff(m)) * f.coeff(j + m);
    out[static_cast<std::size_t>(j)] = s;
  }
  return CoefficientSeries(std::move(out));
}

CoefficientSeries solve_tbar_raw(const CoefficientSeries& symbol, const CoefficientSeries& f) {
  if (f.is_zero()) return CoefficientSeries();
  if (symbol.coeff(0) == Complex(0.0))
    throw std::invalid_argument("solve_tbar_raw: vanishing constant coefficient");
  const int d = f.degree();
  const int band = symbol.degree();
  const Complex diag = std::conj(symbol.coeff(0));
  std::vector<Complex> g(static_cast<std::size_t>(d) + 1, Complex(0.0));
  for (int j = d; j >= 0; --j) {
    Complex s = f.coeff(j);
    const int top = std::min(band, d - j);
    for (int m = 1; m <= top; ++m) s -= std::conj(symbol.coeff(m)) * g[static_cast<std::size_t>(j + m)];
    g[static_cast<std::size_t>(j)] = s / diag;
  }
  return CoefficientSeries(std::move(g));
}

std::vector<Complex> apply_tbar_adjoint_raw(const CoefficientSeries& symbol,
                                            const std::vector<Complex>& w) {
  const int n = static_cast<int>(w.size());
  const int band = symbol.degree();
  std::vector<Complex> out(w.size(), Complex(0.0));
  for (int j = 0; j < n; ++j) {
    Complex s(0.0);
    const int top = std::min(band, j);
    for (int m = 0; m <= top; ++m) s += symbol.coeff(m) * w[static_cast<std::size_t>(j - m)];
    out[static_cast<std::size_t>(j)] = s;
  }
  return out;
}

std::vector<Complex> solve_tbar_adjoint_raw(const CoefficientSeries& symbol,
                                            const std::vector<Complex>& v) {
  if (symbol.coeff(0) == Complex(0.0))
    throw std::invalid_argument("solve_tbar_adjoint_raw: vanishing constant coefficient");
  const int n = static_cast<int>(v.size());
  const int band = symbol.degree();
  const Complex diag = symbol.coeff(0);
  std::vector<Complex> x(v.size(), Complex(0.0));
  for (int j = 0; j < n; ++j) {
    Complex s = v[static_cast<std::size_t>(j)];
    const int top = std::min(band, j);
    for (int m = 1; m <= top; ++m) s -= symbol.coeff(m) * x[static_cast<std::size_t>(j - m)];
    x[static_cast<std::size_t>(j)] = s / diag;
  }
  return x;
}

FiniteSection::FiniteSection(CircleZeroPolynomial symbol, int n)
    : symbol_(std::move(symbol)), n_(n) {
  if (n < 0) throw std::invalid_argument("FiniteSection: n must be >= 0");
}

Complex FiniteSection::entry(int j, int k) const {
  const int off = k - j;
  if (off < 0 || off > symbol_.degree()) return Complex(0.0);
  return std::conj(symbol_.expansion().coeff(off));
}

std::vector<Complex> FiniteSection::apply(const std::vector<Complex>& g) const {
  if (static_cast<int>(g.size()) != size())
    throw std::invalid_argument("FiniteSection::apply: size mismatch");
  const CoefficientSeries out =
      apply_tbar_raw(symbol_.expansion(), CoefficientSeries(std::vector<Complex>(g)));
  std::vector<Complex> v(g.size(), Complex(0.0));
  for (int j = 0; j < size(); ++j) v[static_cast<std::size_t>(j)] = out.coeff(j);
  return v;
}

std::vector<Complex> FiniteSection::dense() const {
  if (n_ > 64)
    throw std::domain_error("FiniteSection::dense: dense fallback is for n <= 64 only");
  std::vector<Complex> m(static_cast<std::size_t>(size()) * size(), Complex(0.0));
  for (int j = 0; j < size(); ++j)
    for (int k = 0; k < size(); ++k) m[static_cast<std::size_t>(j) * size() + k] = entry(j, k);
  return m;
}

FiniteSection build_section(const CircleZeroPolynomial& a, int n) { return FiniteSection(a, n); }

CoefficientSeries apply_T_abar(const CircleZeroPolynomial& a, const CoefficientSeries& f) {
  return apply_tbar_raw(a.expansion(), f);
}

CoefficientSeries preimage(const CircleZeroPolynomial& a, const CoefficientSeries& f) {
  return solve_tbar_raw(a.expansion(), f);
}

double range_norm(const CircleZeroPolynomial& a, const CoefficientSeries& f) {
  return preimage(a, f).h2_norm();
}

Complex abar_inner(const CircleZeroPolynomial& a, const CoefficientSeries& f1,
                   const CoefficientSeries& f2) {
  return h2_inner(preimage(a, f1), preimage(a, f2));
}

RangeElement make_range_element(const CircleZeroPolynomial& a, const CoefficientSeries& f) {
  RangeElement e;
  e.symbol = a;
  e.f = f;
  e.g = preimage(a, f);
  e.norm = e.g.h2_norm();
  return e;
}

CoefficientSeries kernel(const CircleZeroPolynomial& a, Complex lambda, int n) {
  if (std::abs(lambda) >= 1.0) throw std::domain_error("kernel: |lambda| must be < 1");
  if (n < 0) throw std::invalid_argument("kernel: n must be >= 0");
  const int band = a.degree();
  const CoefficientSeries& coeffs = a.expansion();
  const Complex lbar = std::conj(lambda);
  std::vector<Complex> pows(static_cast<std::size_t>(n) + 1);
  pows[0] = Complex(1.0);
  for (int t = 1; t <= n; ++t) pows[static_cast<std::size_t>(t)] = pows[static_cast<std::size_t>(t - 1)] * lbar;
  // (a k_lambda)(j) = sum_{m<=min(j,N)} a_m lbar^{j-m}, truncated at degree n
  std::vector<Complex> prod(static_cast<std::size_t>(n) + 1, Complex(0.0));
  for (int j = 0; j <= n; ++j) {
    Complex s(0.0);
    for (int m = 0; m <= std::min(j, band); ++m)
      s += coeffs.coeff(m) * pows[static_cast<std::size_t>(j - m)];
    prod[static_cast<std::size_t>(j)] = s;
  }
  return apply_tbar_raw(coeffs, CoefficientSeries(std::move(prod)));
}

int kernel_truncation_degree(const CircleZeroPolynomial& a, Complex lambda, double eps) {
  const int band = a.degree();
  const double r = std::abs(lambda);
  if (r == 0.0) return band;
  const double w = a.expansion().wiener_norm();
  const double sup = boundary_sup_norm(a.expansion(), std::max(64, 4 * band));
  // W(a) sup|a| r^{n-N+1} / sqrt(1-r^2) <= eps
  const double target = eps * std::sqrt(1.0 - r * r) / (w * sup);
  if (target >= 1.0) return band;
  const double steps = std::log(target) / std::log(r);
  const int n = band - 1 + static_cast<int>(std::ceil(steps));
  return std::max(n, band);
}

double reproducing_residual(const CircleZeroPolynomial& a, const CoefficientSeries& f,
                            Complex lambda, int n) {
  if (std::abs(lambda) >= 1.0)
    throw std::domain_error("reproducing_residual: |lambda| must be < 1");
  if (n < 0) n = kernel_truncation_degree(a, lambda, 1e-9);
  const CoefficientSeries k = kernel(a, lambda, n);
  const Complex lhs = abar_inner(a, f, k);
  return std::abs(lhs - f.evaluate(lambda));
}

}  // namespace mabar
