#include "mabar/shiftop.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mabar {

double shift_norm_closed(const CircleZeroPolynomial& a) {
  return a.expansion().h2_norm() / std::abs(a.constant_term());
}

LinearMap shift_section_map(const CircleZeroPolynomial& a, int n) {
  if (n < 0) throw std::invalid_argument("shift_section_map: n must be >= 0");
  LinearMap map;
  map.cols = n + 1;
  map.rows = n + 2;
  const CoefficientSeries e = a.expansion();
  map.apply = [e, rows = map.rows](const std::vector<Complex>& x, std::vector<Complex>& y) {
    const CoefficientSeries g(std::vector<Complex>(x.begin(), x.end()));
    const CoefficientSeries out = solve_tbar_raw(e, shift_up(apply_tbar_raw(e, g)));
    y.assign(static_cast<std::size_t>(rows), Complex(0.0));
    for (int r = 0; r < rows; ++r) y[static_cast<std::size_t>(r)] = out.coeff(r);
  };
  map.apply_adjoint = [e, cols = map.cols](const std::vector<Complex>& y, std::vector<Complex>& x) {
    const std::vector<Complex> s = solve_tbar_adjoint_raw(e, y);
    // drop coordinate 0 (adjoint of prepending one)
    std::vector<Complex> shifted(static_cast<std::size_t>(cols), Complex(0.0));
    for (int k = 0; k < cols; ++k) shifted[static_cast<std::size_t>(k)] = s[static_cast<std::size_t>(k) + 1];
    x = apply_tbar_adjoint_raw(e, shifted);
  };
  return map;
}

ShiftReport shift_norm_sections(const CircleZeroPolynomial& a, const std::vector<int>& n_list) {
  if (n_list.empty()) throw std::invalid_argument("shift_norm_sections: empty n list");
  for (std::size_t i = 1; i < n_list.size(); ++i)
    if (n_list[i] <= n_list[i - 1])
      throw std::invalid_argument("shift_norm_sections: n list must increase");
  ShiftReport rep;
  rep.closed_form = shift_norm_closed(a);
  for (int n : n_list)
    rep.section_values.emplace_back(n, sigma_max_power(shift_section_map(a, n)));

  // ratio attained by the stated maximizer f* = T_{a-bar}(B a)
  const CoefficientSeries fstar = apply_T_abar(a, backward_shift(a.expansion()));
  if (!fstar.is_zero()) {
    const double ratio = range_norm(a, shift_up(fstar)) / range_norm(a, fstar);
    rep.maximizer_residual = std::abs(ratio - rep.closed_form);
  } else {
    rep.maximizer_residual = std::abs(1.0 - rep.closed_form);  // a constant: S is an isometry
  }
  return rep;
}

double shift_identity_residual(const CircleZeroPolynomial& a, const CoefficientSeries& f) {
  if (f.is_zero()) return 0.0;
  const double lhs = range_norm(a, shift_up(f));
  const double nf = range_norm(a, f);
  const CoefficientSeries fstar = apply_T_abar(a, backward_shift(a.expansion()));
  const Complex cross = abar_inner(a, f, fstar);
  const double norm_one_sq = 1.0 / std::norm(a.constant_term());
  const double rhs = nf * nf + norm_one_sq * std::norm(cross);
  return std::abs(lhs * lhs - rhs);
}

double norm_one_identity_residual(const CircleZeroPolynomial& a) {
  return std::abs(range_norm(a, CoefficientSeries::one()) - 1.0 / std::abs(a.constant_term()));
}

double tbar_ba_identity_residual(const CircleZeroPolynomial& a) {
  const CoefficientSeries fstar = apply_T_abar(a, backward_shift(a.expansion()));
  const double lhs = fstar.is_zero() ? 0.0 : std::pow(range_norm(a, fstar), 2);
  const double rhs =
      std::pow(a.expansion().h2_norm(), 2) - std::norm(a.constant_term());
  return std::abs(lhs - rhs);
}

double adjoint_residual(const CircleZeroPolynomial& a, int n) {
  const int band = a.degree();
  if (n < band + 2) throw std::invalid_argument("adjoint_residual: n must be >= N + 2");
  const int interior = n - band - 1;  // compare coordinates 0..interior

  const LinearMap smap = shift_section_map(a, n);
  const CoefficientSeries ba = backward_shift(a.expansion());
  const Complex diag = std::conj(a.expansion().coeff(0));

  std::vector<Complex> e(static_cast<std::size_t>(n) + 1, Complex(0.0));
  std::vector<Complex> y(static_cast<std::size_t>(n) + 2, Complex(0.0));
  double residual = 0.0;
  for (int k = 0; k <= interior; ++k) {
    e[static_cast<std::size_t>(k)] = Complex(1.0);
    smap.apply(e, y);
    // rank-one part: <g, Ba> * preimage(1) lands on coordinate 0
    y[0] += std::conj(ba.coeff(k)) / diag;
    // X* in coordinates is the forward shift: e_k -> e_{k+1}
    for (int r = 0; r <= interior; ++r) {
      const Complex want = (r == k + 1) ? Complex(1.0) : Complex(0.0);
      residual = std::max(residual, std::abs(y[static_cast<std::size_t>(r)] - want));
    }
    e[static_cast<std::size_t>(k)] = Complex(0.0);
  }
  return residual;
}

}  // namespace mabar
