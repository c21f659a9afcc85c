#include "mabar/decay.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mabar {

namespace {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rms = 0.0;
};

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (f.intercept + f.slope * x[i]);
    ss += r * r;
  }
  f.rms = std::sqrt(ss / n);
  return f;
}

}  // namespace

DecayFit decay_fit(const CoefficientSeries& psi, DecayWindow window) {
  if (window.n0 < 0 || window.n1 < window.n0 || window.n1 > psi.degree())
    throw std::invalid_argument("decay_fit: window outside the coefficient range");
  std::vector<double> idx, root_idx, logs;
  for (int n = window.n0; n <= window.n1; ++n) {
    const double mag = std::abs(psi.coeff(n));
    if (mag <= 0.0 || mag < 1e-300) continue;  // zero coefficients excluded
    idx.push_back(static_cast<double>(n));
    root_idx.push_back(std::sqrt(static_cast<double>(n)));
    logs.push_back(std::log(mag));
  }
  if (idx.size() < 8)
    throw std::invalid_argument("decay_fit: fewer than 8 nonzero coefficients in window");

  const LineFit sqrt_fit = least_squares(root_idx, logs);
  const LineFit lin_fit = least_squares(idx, logs);

  DecayFit out;
  out.c = -sqrt_fit.slope;
  out.log_c = sqrt_fit.intercept;
  out.residual = sqrt_fit.rms;
  out.window = window;
  out.samples = static_cast<int>(idx.size());
  out.geometric_rate = -lin_fit.slope;
  out.geometric_residual = lin_fit.rms;
  out.geometric = lin_fit.rms <= 0.1 && out.geometric_rate > 1e-3;
  return out;
}

bool in_decay_class(const DecayFit& fit, double min_c, double max_residual) {
  if (fit.geometric) return true;
  return fit.c >= min_c && fit.residual <= max_residual;
}

CoefficientSeries sample_class_F(double c, int n) {
  if (c <= 0.0 || n < 1) throw std::invalid_argument("sample_class_F: need c > 0, n >= 1");
  std::vector<Complex> coef(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k)
    coef[static_cast<std::size_t>(k)] = Complex(std::exp(-c * std::sqrt(static_cast<double>(k))), 0.0);
  return CoefficientSeries(std::move(coef));
}

std::vector<ProbeRow> universal_mult_probe(const CoefficientSeries& psi,
                                           const std::vector<CircleZeroPolynomial>& symbols,
                                           const std::vector<int>& n_list,
                                           double growth_threshold) {
  if (symbols.empty()) throw std::invalid_argument("universal_mult_probe: no symbols");
  std::vector<ProbeRow> rows;
  for (const CircleZeroPolynomial& a : symbols) {
    double prev = 0.0;
    for (int n : n_list) {
      ProbeRow row;
      row.symbol = a.describe();
      row.n = n;
      row.sigma = numeric_mult_norm(a, a, psi, n);
      row.growth = prev > 0.0 ? row.sigma / prev : 1.0;
      row.flagged = row.growth >= growth_threshold;
      prev = row.sigma;
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace mabar
