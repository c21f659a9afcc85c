#include "mabar/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mabar {

namespace {

void trim_exact_zeros(std::vector<Complex>& c) {
  while (!c.empty() && c.back() == Complex(0.0)) c.pop_back();
}

}  // namespace

CoefficientSeries::CoefficientSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  trim_exact_zeros(coeffs_);
}

CoefficientSeries::CoefficientSeries(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) {
  trim_exact_zeros(coeffs_);
}

CoefficientSeries CoefficientSeries::one() { return CoefficientSeries({Complex(1.0)}); }

CoefficientSeries CoefficientSeries::monomial(int k, Complex scale) {
  if (k < 0) throw std::invalid_argument("monomial: negative degree");
  std::vector<Complex> c(static_cast<std::size_t>(k) + 1, Complex(0.0));
  c.back() = scale;
  return CoefficientSeries(std::move(c));
}

Complex CoefficientSeries::evaluate(Complex z) const {
  Complex acc(0.0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::vector<Complex> CoefficientSeries::jet(Complex z0, int len) const {
  // Repeated synthetic division by (z - z0); the remainders are the Taylor
  // coefficients f^{(k)}(z0)/k!.
  std::vector<Complex> out(static_cast<std::size_t>(std::max(len, 0)), Complex(0.0));
  std::vector<Complex> work = coeffs_;
  for (int k = 0; k < len; ++k) {
    if (work.empty()) break;
    Complex rem(0.0);
    for (auto it = work.rbegin(); it != work.rend(); ++it) {
      rem = rem * z0 + *it;
      *it = rem;
    }
    out[static_cast<std::size_t>(k)] = work.front();
    work.erase(work.begin());
  }
  return out;
}

CoefficientSeries CoefficientSeries::derivative() const {
  if (coeffs_.size() <= 1) return CoefficientSeries();
  std::vector<Complex> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return CoefficientSeries(std::move(d));
}

double CoefficientSeries::h2_norm() const {
  double s = 0.0;
  for (const Complex& c : coeffs_) s += std::norm(c);
  return std::sqrt(s);
}

double CoefficientSeries::wiener_norm() const {
  double s = 0.0;
  for (const Complex& c : coeffs_) s += std::abs(c);
  return s;
}

CoefficientSeries CoefficientSeries::truncated(int max_degree) const {
  if (max_degree < 0) return CoefficientSeries();
  if (degree() <= max_degree) return *this;
  return CoefficientSeries(
      std::vector<Complex>(coeffs_.begin(), coeffs_.begin() + max_degree + 1));
}

CoefficientSeries CoefficientSeries::trimmed(double tol) const {
  std::vector<Complex> c = coeffs_;
  while (!c.empty() && std::abs(c.back()) <= tol) c.pop_back();
  return CoefficientSeries(std::move(c));
}

CoefficientSeries& CoefficientSeries::operator+=(const CoefficientSeries& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Complex(0.0));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim_exact_zeros(coeffs_);
  return *this;
}

CoefficientSeries& CoefficientSeries::operator-=(const CoefficientSeries& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Complex(0.0));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim_exact_zeros(coeffs_);
  return *this;
}

CoefficientSeries& CoefficientSeries::operator*=(Complex scale) {
  if (scale == Complex(0.0)) {
    coeffs_.clear();
    return *this;
  }
  for (Complex& c : coeffs_) c *= scale;
  return *this;
}

CoefficientSeries CoefficientSeries::operator-() const {
  CoefficientSeries out = *this;
  for (Complex& c : out.coeffs_) c = -c;
  return out;
}

CoefficientSeries operator*(const CoefficientSeries& lhs, const CoefficientSeries& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return CoefficientSeries();
  std::vector<Complex> out(lhs.size() + rhs.size() - 1, Complex(0.0));
  for (std::size_t i = 0; i < lhs.size(); ++i)
    for (std::size_t j = 0; j < rhs.size(); ++j)
      out[i + j] += lhs.coeffs()[i] * rhs.coeffs()[j];
  return CoefficientSeries(std::move(out));
}

Complex h2_inner(const CoefficientSeries& f, const CoefficientSeries& g) {
  Complex acc(0.0);
  const std::size_t n = std::min(f.size(), g.size());
  for (std::size_t k = 0; k < n; ++k) acc += f.coeffs()[k] * std::conj(g.coeffs()[k]);
  return acc;
}

DivisionResult divide(const CoefficientSeries& f, const CoefficientSeries& d) {
  if (d.is_zero()) throw std::invalid_argument("divide: zero divisor");
  if (f.degree() < d.degree()) return {CoefficientSeries(), f};
  std::vector<Complex> rem = f.coeffs();
  const int dd = d.degree();
  const Complex lead = d.coeffs().back();
  std::vector<Complex> quot(static_cast<std::size_t>(f.degree() - dd) + 1, Complex(0.0));
  for (int k = f.degree() - dd; k >= 0; --k) {
    const Complex q = rem[static_cast<std::size_t>(k + dd)] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(k + j)] -= q * d.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(std::max(dd, 0)));
  return {CoefficientSeries(std::move(quot)), CoefficientSeries(std::move(rem))};
}

CoefficientSeries backward_shift(const CoefficientSeries& f) {
  if (f.size() <= 1) return CoefficientSeries();
  return CoefficientSeries(std::vector<Complex>(f.coeffs().begin() + 1, f.coeffs().end()));
}

CoefficientSeries shift_up(const CoefficientSeries& f) {
  if (f.is_zero()) return CoefficientSeries();
  std::vector<Complex> c(f.size() + 1, Complex(0.0));
  std::copy(f.coeffs().begin(), f.coeffs().end(), c.begin() + 1);
  return CoefficientSeries(std::move(c));
}

double max_coeff_distance(const CoefficientSeries& f, const CoefficientSeries& g) {
  double m = 0.0;
  const int top = std::max(f.degree(), g.degree());
  for (int k = 0; k <= top; ++k) m = std::max(m, std::abs(f.coeff(k) - g.coeff(k)));
  return m;
}

double boundary_sup_norm(const CoefficientSeries& p, int grid_size) {
  if (p.is_zero()) return 0.0;
  const int m = std::max(grid_size, 16);
  double best = -1.0;
  double best_theta = 0.0;
  for (int k = 0; k < m; ++k) {
    const double theta = kTwoPi * k / m;
    const double v = std::abs(p.evaluate(std::polar(1.0, theta)));
    if (v > best) {
      best = v;
      best_theta = theta;
    }
  }
  // Golden-section refinement on |p(e^{i theta})| around the grid maximizer.
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = best_theta - kTwoPi / m;
  double hi = best_theta + kTwoPi / m;
  auto val = [&p](double t) { return std::abs(p.evaluate(std::polar(1.0, t))); };
  double x1 = hi - gr * (hi - lo);
  double x2 = lo + gr * (hi - lo);
  double f1 = val(x1);
  double f2 = val(x2);
  while (hi - lo > 1e-13) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = val(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = val(x1);
    }
  }
  return std::max(best, std::max(f1, f2));
}

}  // namespace mabar
