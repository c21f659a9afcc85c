#include "mabar/mate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mabar {

namespace {

bool power_of_two(int m) { return m > 0 && (m & (m - 1)) == 0; }

// Iterative radix-2 FFT, sign = -1 forward / +1 inverse (unscaled).
void fft(std::vector<Complex>& buf, double sign) {
  const std::size_t n = buf.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(buf[i], buf[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * kTwoPi / static_cast<double>(len);
    const Complex w0 = std::polar(1.0, ang);
    for (std::size_t i = 0; i < n; i += len) {
      Complex w(1.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const Complex u = buf[i + k];
        const Complex t = buf[i + k + len / 2] * w;
        buf[i + k] = u + t;
        buf[i + k + len / 2] = u - t;
        w *= w0;
      }
    }
  }
}

Complex grid_point(int k, int m, bool offset) {
  const double theta = kTwoPi * (k + (offset ? 0.5 : 0.0)) / m;
  return std::polar(1.0, theta);
}

// Laurent coefficients of |p|^2 on the circle: c_k = sum_l p_{l+k} conj(p_l).
std::vector<Complex> modulus_squared_coeffs(const CoefficientSeries& p, int width) {
  std::vector<Complex> out(static_cast<std::size_t>(2 * width) + 1, Complex(0.0));
  for (int k = -width; k <= width; ++k) {
    Complex s(0.0);
    for (int l = 0; l + std::abs(k) <= p.degree(); ++l)
      s += p.coeff(l + std::abs(k)) * std::conj(p.coeff(l));
    out[static_cast<std::size_t>(k + width)] = (k >= 0) ? s : std::conj(s);
  }
  return out;
}

}  // namespace

BoundaryGrid boundary_grid(const RationalSymbol& a, int grid_size) {
  if (grid_size < 4 * (a.num().degree() + a.den().degree()))
    throw std::invalid_argument("boundary_grid: need at least 4 samples per degree");
  BoundaryGrid g;
  g.size = grid_size;
  g.values.resize(static_cast<std::size_t>(grid_size));
  for (int k = 0; k < grid_size; ++k)
    g.values[static_cast<std::size_t>(k)] = a.evaluate(grid_point(k, grid_size, false));
  return g;
}

double sup_norm_on_circle(const RationalSymbol& a, int grid_size) {
  const int m = std::max(grid_size, 4 * (a.num().degree() + a.den().degree() + 1));
  double best = -1.0;
  double best_theta = 0.0;
  for (int k = 0; k < m; ++k) {
    const double theta = kTwoPi * k / m;
    const double v = std::abs(a.evaluate(std::polar(1.0, theta)));
    if (v > best) {
      best = v;
      best_theta = theta;
    }
  }
  auto val = [&a](double t) { return std::abs(a.evaluate(std::polar(1.0, t))); };
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = best_theta - kTwoPi / m;
  double hi = best_theta + kTwoPi / m;
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = val(x1), f2 = val(x2);
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

double sup_norm_on_circle(const CircleZeroPolynomial& a, int grid_size) {
  return sup_norm_on_circle(RationalSymbol(a.expansion()), grid_size);
}

NormalizedSymbol normalize_nonextreme(const RationalSymbol& a, int grid_size) {
  NormalizedSymbol out;
  out.scale = 2.0 * sup_norm_on_circle(a, grid_size);
  if (out.scale == 0.0) throw std::invalid_argument("normalize_nonextreme: zero symbol");
  out.symbol = RationalSymbol(a.num() * (1.0 / out.scale), a.den());
  return out;
}

MateResult pythagorean_mate_full(const RationalSymbol& a, int grid_size) {
  if (!power_of_two(grid_size) || grid_size < 64)
    throw std::invalid_argument("pythagorean_mate: grid size must be a power of two >= 64");
  const int min_grid = 4 * (a.num().degree() + a.den().degree() + 1);
  if (grid_size < min_grid)
    throw std::invalid_argument("pythagorean_mate: grid too small for the symbol degree");
  const double sup = sup_norm_on_circle(a, grid_size);
  if (sup > 1.0 + 1e-10) {
    std::ostringstream os;
    os << "pythagorean_mate: ||a||_inf = " << sup << " exceeds 1";
    throw std::domain_error(os.str());
  }

  // T(theta) = |den|^2 - |num|^2 >= 0 as a Laurent polynomial, exactly.
  const int width = std::max(a.num().degree(), a.den().degree());
  std::vector<Complex> den2 = modulus_squared_coeffs(a.den(), width);
  std::vector<Complex> num2 = modulus_squared_coeffs(a.num(), width);
  std::vector<Complex> t(den2.size());
  double tscale = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    t[i] = den2[i] - num2[i];
    tscale = std::max(tscale, std::abs(t[i]));
  }
  if (tscale <= 1e-14)
    throw std::domain_error("pythagorean_mate: |a| = 1 a.e. on the circle (extreme symbol)");
  const CoefficientSeries big_p = CoefficientSeries(std::move(t)).trimmed(1e-15 * tscale);
  auto t_at = [&](double theta) {
    // e^{-i D theta} P(e^{i theta}), real by symmetry
    return (std::polar(1.0, -width * theta) * big_p.evaluate(std::polar(1.0, theta))).real();
  };

  // Boundary contact points |a| = 1: unit-circle roots of P, of even order,
  // confirmed by the boundary values before deflating. Root multiplicity is
  // recovered by repeated synthetic division with a remainder check, which
  // tolerates the root finder scattering a multiple root around its center.
  MateResult out;
  CoefficientSeries q = big_p;
  if (big_p.degree() > 0) {
    std::vector<double> near_circle;
    for (const Complex& r : polynomial_roots(big_p))
      if (std::abs(std::abs(r) - 1.0) <= 1e-3) near_circle.push_back(std::arg(r));
    for (const auto& [theta, count] : cluster_circle_angles(std::move(near_circle), 2e-3)) {
      if (std::abs(t_at(theta)) > 1e-6 * tscale) continue;
      const Complex zeta = std::polar(1.0, theta);
      const CoefficientSeries linear({-zeta, Complex(1.0)});
      int divisions = 0;
      while (divisions < count + 1) {
        const DivisionResult dr = divide(q, linear);
        if (dr.remainder.h2_norm() > 1e-6 * std::max(1.0, q.h2_norm())) break;
        q = dr.quotient;
        ++divisions;
      }
      if (divisions % 2 != 0) {  // boundary zeros of 1-|a|^2 have even order
        q = q * linear;
        --divisions;
      }
      if (divisions > 0) out.contact.push_back({theta, divisions / 2});
    }
  }

  // Smooth part: u = log(|Q|/|den|^2) on the grid, analytic completion by the
  // spectral multiplier, then exp.
  const int m = grid_size;
  bool offset = false;
  std::vector<Complex> u(static_cast<std::size_t>(m));
  for (int attempt = 0; attempt < 2; ++attempt) {
    bool collision = false;
    for (int k = 0; k < m; ++k) {
      const Complex z = grid_point(k, m, offset);
      const double qv = std::abs(q.evaluate(z));
      const double dv = std::abs(a.den().evaluate(z));
      if (qv < 1e-280 || dv < 1e-280) {
        collision = true;
        break;
      }
      u[static_cast<std::size_t>(k)] = Complex(std::log(qv) - 2.0 * std::log(dv), 0.0);
    }
    if (!collision) break;
    if (offset) throw std::runtime_error("pythagorean_mate: grid collision persists");
    offset = true;  // shift samples half a cell off the singular point
  }

  std::vector<Complex> spec = u;
  fft(spec, -1.0);
  for (Complex& c : spec) c /= static_cast<double>(m);
  spec[0] *= 0.5;
  spec[static_cast<std::size_t>(m / 2)] *= 0.5;
  for (int k = m / 2 + 1; k < m; ++k) spec[static_cast<std::size_t>(k)] = Complex(0.0);
  fft(spec, +1.0);  // spec now holds v on the grid, Re v = u/2

  std::vector<Complex> e_grid(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) e_grid[static_cast<std::size_t>(k)] = std::exp(spec[static_cast<std::size_t>(k)]);
  fft(e_grid, -1.0);
  for (Complex& c : e_grid) c /= static_cast<double>(m);
  if (offset) {
    for (int mm = 0; mm < m; ++mm)
      e_grid[static_cast<std::size_t>(mm)] *= std::polar(1.0, -kPi * mm / m);
  }
  for (int mm = m / 2; mm < m; ++mm) out.tail_energy += std::norm(e_grid[static_cast<std::size_t>(mm)]);
  e_grid.resize(static_cast<std::size_t>(m / 2));
  const CoefficientSeries smooth(std::move(e_grid));

  // Reassemble with the exact contact-point polynomial and fix the phase so
  // that b(0) > 0: the polynomial contributes prod(-zeta_i)^{s_i} at 0.
  CoefficientSeries poly = CoefficientSeries::one();
  double phase = 0.0;
  int total_order = 0;
  for (const ZeroAngle& z : out.contact) {
    const Complex zeta = std::polar(1.0, z.theta);
    for (int s = 0; s < z.mult; ++s) poly = poly * CoefficientSeries({-zeta, Complex(1.0)});
    phase += z.mult * z.theta;
    total_order += z.mult;
  }
  const Complex unimodular =
      ((total_order % 2 == 0) ? 1.0 : -1.0) * std::polar(1.0, -phase);
  out.b = (unimodular * poly * smooth).truncated(m / 2 - 1);
  return out;
}

CoefficientSeries pythagorean_mate(const RationalSymbol& a, int grid_size) {
  return pythagorean_mate_full(a, grid_size).b;
}

MateResidual mate_residual(const RationalSymbol& a, const CoefficientSeries& b, int grid_size) {
  MateResidual out;
  for (int k = 0; k < grid_size; ++k) {
    const Complex z = grid_point(k, grid_size, false);
    const double s = std::norm(a.evaluate(z)) + std::norm(b.evaluate(z));
    out.residual = std::max(out.residual, std::abs(s - 1.0));
  }
  out.b0 = b.coeff(0);
  out.b0_positive = out.b0.real() > 0.0 && std::abs(out.b0.imag()) <= 1e-9 * out.b0.real() + 1e-12;
  return out;
}

double winding_number(const CoefficientSeries& p, double radius, int samples) {
  double total = 0.0;
  Complex prev = p.evaluate(Complex(radius, 0.0));
  for (int k = 1; k <= samples; ++k) {
    const Complex z = radius * std::polar(1.0, kTwoPi * k / samples);
    const Complex cur = p.evaluate(z);
    total += std::arg(cur / prev);
    prev = cur;
  }
  return total / kTwoPi;
}

}  // namespace mabar
