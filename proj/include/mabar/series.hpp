#ifndef MABAR_SERIES_HPP
#define MABAR_SERIES_HPP

#include <complex>
#include <initializer_list>
#include <vector>

namespace mabar {

using Complex = std::complex<double>;

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;

/// Finite complex Taylor-coefficient sequence: a polynomial, or a truncated
/// element of H^2. Index k holds the coefficient of z^k. The H^2 norm is
/// the l^2 norm of the coefficients.
class CoefficientSeries {
 public:
  CoefficientSeries() = default;  // the zero series
  explicit CoefficientSeries(std::vector<Complex> coeffs);
  CoefficientSeries(std::initializer_list<Complex> coeffs);

  static CoefficientSeries one();
  static CoefficientSeries monomial(int k, Complex scale = 1.0);

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the stored representation; -1 for the zero series.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  Complex coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : Complex(0.0);
  }
  const std::vector<Complex>& coeffs() const { return coeffs_; }

  Complex evaluate(Complex z) const;
  // Taylor coefficients about z0: [f(z0), f'(z0), f''(z0)/2!, ...], `len` of them.
  std::vector<Complex> jet(Complex z0, int len) const;
  CoefficientSeries derivative() const;

  double h2_norm() const;
  double wiener_norm() const;  // sum of |c_k|

  CoefficientSeries truncated(int max_degree) const;
  // Drops trailing coefficients of modulus <= tol.
  CoefficientSeries trimmed(double tol) const;

  CoefficientSeries& operator+=(const CoefficientSeries& rhs);
  CoefficientSeries& operator-=(const CoefficientSeries& rhs);
  CoefficientSeries& operator*=(Complex scale);

  friend CoefficientSeries operator+(CoefficientSeries lhs, const CoefficientSeries& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend CoefficientSeries operator-(CoefficientSeries lhs, const CoefficientSeries& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend CoefficientSeries operator*(CoefficientSeries lhs, Complex scale) {
    lhs *= scale;
    return lhs;
  }
  friend CoefficientSeries operator*(Complex scale, CoefficientSeries rhs) {
    rhs *= scale;
    return rhs;
  }
  CoefficientSeries operator-() const;

 private:
  std::vector<Complex> coeffs_;  // trailing exact zeros trimmed on construction
};

// Convolution product.
CoefficientSeries operator*(const CoefficientSeries& lhs, const CoefficientSeries& rhs);

// <f, g> = sum f_k conj(g_k), the H^2 pairing of polynomials.
Complex h2_inner(const CoefficientSeries& f, const CoefficientSeries& g);

// Euclidean division f = q*d + r with deg r < deg d. Throws on zero divisor.
struct DivisionResult {
  CoefficientSeries quotient;
  CoefficientSeries remainder;
};
DivisionResult divide(const CoefficientSeries& f, const CoefficientSeries& d);

// B f = (f - f(0))/z.
CoefficientSeries backward_shift(const CoefficientSeries& f);
// z * f.
CoefficientSeries shift_up(const CoefficientSeries& f);

double max_coeff_distance(const CoefficientSeries& f, const CoefficientSeries& g);

// max |p(e^{i theta})| over an M-point grid, refined by golden-section search
// around the grid maximizer. Relative accuracy ~1e-10 for M >= 4*deg.
double boundary_sup_norm(const CoefficientSeries& p, int grid_size);

}  // namespace mabar

#endif  // MABAR_SERIES_HPP
