#include "mabar/symbols.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mabar {

double normalize_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

double angle_distance(double theta1, double theta2) {
  const double d = std::abs(normalize_angle(theta1) - normalize_angle(theta2));
  return std::min(d, kTwoPi - d);
}

namespace {

// signed angular difference in (-pi, pi]
double wrap_pm_pi(double d) {
  d = std::fmod(d + kPi, kTwoPi);
  if (d < 0.0) d += kTwoPi;
  return d - kPi;
}

}  // namespace

std::vector<std::pair<double, int>> cluster_circle_angles(std::vector<double> angles,
                                                          double tol) {
  std::sort(angles.begin(), angles.end());
  std::vector<std::pair<double, int>> clusters;
  for (double th : angles) {
    if (!clusters.empty() && angle_distance(clusters.back().first, th) <= tol) {
      auto& [mean, count] = clusters.back();
      mean += wrap_pm_pi(th - mean) / (count + 1);  // circular running mean
      count += 1;
    } else {
      clusters.emplace_back(th, 1);
    }
  }
  // one cluster can straddle the arg seam and appear at both ends
  if (clusters.size() >= 2 &&
      angle_distance(clusters.front().first, clusters.back().first) <= tol) {
    auto& [head_mean, head_count] = clusters.front();
    const auto& [tail_mean, tail_count] = clusters.back();
    head_mean = tail_mean + wrap_pm_pi(head_mean - tail_mean) * head_count /
                                (head_count + tail_count);
    head_count += tail_count;
    clusters.pop_back();
  }
  for (auto& [mean, count] : clusters) mean = normalize_angle(mean);
  return clusters;
}

namespace {

// Sorts by angle and merges entries closer than tol (used both for exact
// zero lists and for clustered root-finder output).
std::vector<ZeroAngle> canonicalize_zeros(std::vector<ZeroAngle> zeros, double tol) {
  for (ZeroAngle& z : zeros) {
    if (z.mult < 1) throw std::invalid_argument("zero multiplicity must be >= 1");
    z.theta = normalize_angle(z.theta);
  }
  std::sort(zeros.begin(), zeros.end(),
            [](const ZeroAngle& a, const ZeroAngle& b) { return a.theta < b.theta; });
  std::vector<ZeroAngle> merged;
  for (const ZeroAngle& z : zeros) {
    if (!merged.empty() && angle_distance(merged.back().theta, z.theta) <= tol) {
      merged.back().mult += z.mult;
    } else {
      merged.push_back(z);
    }
  }
  // wraparound: first and last may straddle 0
  if (merged.size() >= 2 &&
      angle_distance(merged.front().theta, merged.back().theta) <= tol) {
    merged.front().mult += merged.back().mult;
    merged.pop_back();
  }
  return merged;
}

CoefficientSeries expand_zeros(const std::vector<ZeroAngle>& zeros) {
  CoefficientSeries acc = CoefficientSeries::one();
  for (const ZeroAngle& z : zeros) {
    const Complex root = std::polar(1.0, z.theta);
    const CoefficientSeries factor({-root, Complex(1.0)});
    for (int m = 0; m < z.mult; ++m) acc = acc * factor;
  }
  return acc;
}

}  // namespace

CircleZeroPolynomial::CircleZeroPolynomial() : expansion_(CoefficientSeries::one()) {}

CircleZeroPolynomial::CircleZeroPolynomial(std::vector<ZeroAngle> zeros, double angle_tol)
    : zeros_(canonicalize_zeros(std::move(zeros), angle_tol)) {
  degree_ = 0;
  for (const ZeroAngle& z : zeros_) degree_ += z.mult;
  expansion_ = expand_zeros(zeros_);
}

CircleZeroPolynomial CircleZeroPolynomial::one() { return CircleZeroPolynomial(); }

Complex CircleZeroPolynomial::constant_term() const {
  double phase = 0.0;
  for (const ZeroAngle& z : zeros_) phase += z.mult * z.theta;
  const double sign = (degree_ % 2 == 0) ? 1.0 : -1.0;
  return sign * std::polar(1.0, phase);
}

Complex CircleZeroPolynomial::evaluate(Complex z) const {
  Complex acc(1.0);
  for (const ZeroAngle& za : zeros_) {
    const Complex d = z - std::polar(1.0, za.theta);
    for (int m = 0; m < za.mult; ++m) acc *= d;
  }
  return acc;
}

bool CircleZeroPolynomial::same_zeros(const CircleZeroPolynomial& other, double tol) const {
  if (degree_ != other.degree_ || zeros_.size() != other.zeros_.size()) return false;
  for (std::size_t i = 0; i < zeros_.size(); ++i) {
    if (zeros_[i].mult != other.zeros_[i].mult) return false;
    if (angle_distance(zeros_[i].theta, other.zeros_[i].theta) > tol) return false;
  }
  return true;
}

std::string CircleZeroPolynomial::describe() const {
  if (is_one()) return "1";
  std::ostringstream os;
  for (const ZeroAngle& z : zeros_) {
    os << "(z-e^{i" << z.theta << "})";
    if (z.mult > 1) os << "^" << z.mult;
  }
  return os.str();
}

CoefficientSeries expand(const CircleZeroPolynomial& a) { return a.expansion(); }

RationalSymbol::RationalSymbol() : num_(CoefficientSeries::one()), den_(CoefficientSeries::one()) {}

RationalSymbol::RationalSymbol(CoefficientSeries num) : RationalSymbol(std::move(num), CoefficientSeries::one()) {}

RationalSymbol::RationalSymbol(CoefficientSeries num, CoefficientSeries den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (num_.is_zero()) throw std::invalid_argument("RationalSymbol: zero numerator");
  if (den_.is_zero()) throw std::invalid_argument("RationalSymbol: zero denominator");
  for (const Complex& r : polynomial_roots(den_)) {
    if (std::abs(r) <= 1.0 + 1e-10)
      throw std::invalid_argument("RationalSymbol: denominator root inside the closed disk");
  }
}

RationalSymbol RationalSymbol::constant(Complex c) {
  return RationalSymbol(CoefficientSeries({c}), CoefficientSeries::one());
}

std::vector<Complex> polynomial_roots(const CoefficientSeries& p) {
  CoefficientSeries q = p.trimmed(0.0);
  if (q.is_zero()) throw std::invalid_argument("polynomial_roots: zero polynomial");
  // strip roots at the origin
  std::vector<Complex> roots;
  std::vector<Complex> c = q.coeffs();
  std::size_t first = 0;
  while (first < c.size() && c[first] == Complex(0.0)) {
    roots.push_back(Complex(0.0));
    ++first;
  }
  c.erase(c.begin(), c.begin() + static_cast<long>(first));
  const int d = static_cast<int>(c.size()) - 1;
  if (d <= 0) return roots;
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
  const Complex lead = c.back();
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -c[static_cast<std::size_t>(i)] / lead;
  for (int i = 1; i < d; ++i) companion(i, i - 1) = Complex(1.0);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    std::ostringstream os;
    os << "polynomial_roots: eigensolver failed to converge (degree " << d << ", residual "
       << solver.info() << ")";
    throw std::runtime_error(os.str());
  }
  for (int i = 0; i < d; ++i) roots.push_back(solver.eigenvalues()(i));
  return roots;
}

CircleZeroPolynomial reduce(const RationalSymbol& a, double tol, double cluster_tol) {
  std::vector<ZeroAngle> zeros;
  for (const Complex& r : polynomial_roots(a.num())) {
    if (std::abs(std::abs(r) - 1.0) <= tol) zeros.push_back({std::arg(r), 1});
  }
  return CircleZeroPolynomial(std::move(zeros), cluster_tol);
}

std::optional<CircleZeroPolynomial> circle_divides(const CircleZeroPolynomial& a1,
                                                   const CircleZeroPolynomial& a2,
                                                   double tol) {
  std::vector<ZeroAngle> remaining = a1.zeros();
  for (const ZeroAngle& z2 : a2.zeros()) {
    bool matched = false;
    for (ZeroAngle& z1 : remaining) {
      if (z1.mult > 0 && angle_distance(z1.theta, z2.theta) <= tol) {
        if (z1.mult < z2.mult) return std::nullopt;
        z1.mult -= z2.mult;
        matched = true;
        break;
      }
    }
    if (!matched) return std::nullopt;
  }
  std::vector<ZeroAngle> quotient;
  for (const ZeroAngle& z : remaining)
    if (z.mult > 0) quotient.push_back(z);
  return CircleZeroPolynomial(std::move(quotient), tol);
}

// --- SingularFactorFunction ---

namespace {

std::vector<CircleFactor> canonicalize_factors(std::vector<CircleFactor> factors,
                                               double angle_tol) {
  for (CircleFactor& f : factors) f.theta = normalize_angle(f.theta);
  std::sort(factors.begin(), factors.end(),
            [](const CircleFactor& a, const CircleFactor& b) { return a.theta < b.theta; });
  std::vector<CircleFactor> merged;
  for (const CircleFactor& f : factors) {
    if (!merged.empty() && angle_distance(merged.back().theta, f.theta) <= angle_tol) {
      merged.back().alpha += f.alpha;
    } else {
      merged.push_back(f);
    }
  }
  if (merged.size() >= 2 &&
      angle_distance(merged.front().theta, merged.back().theta) <= angle_tol) {
    merged.front().alpha += merged.back().alpha;
    merged.pop_back();
  }
  std::erase_if(merged, [](const CircleFactor& f) { return std::abs(f.alpha) <= 1e-12; });
  return merged;
}

bool is_nonnegative_integer(double alpha, double tol) {
  const double r = std::round(alpha);
  return r >= -0.5 && std::abs(alpha - r) <= tol;
}

}  // namespace

SingularFactorFunction::SingularFactorFunction() = default;

SingularFactorFunction::SingularFactorFunction(RationalSymbol rational_part,
                                               std::vector<CircleFactor> factors,
                                               double modulus_tol, double angle_tol)
    : rational_(std::move(rational_part)) {
  // Fold circle zeros of the numerator into the factor list so that all
  // circle behavior is carried by explicit exponents. Multiple roots come
  // back from the root finder spread around the circle, so candidates are
  // clustered loosely and the multiplicity is recovered by repeated synthetic
  // division with a remainder check.
  CoefficientSeries num = rational_.num();
  if (num.degree() > 0) {
    const double candidate_band = std::max(modulus_tol, 1e-6);
    std::vector<double> angles;
    for (const Complex& r : polynomial_roots(num))
      if (std::abs(std::abs(r) - 1.0) <= candidate_band) angles.push_back(std::arg(r));
    const auto clusters = cluster_circle_angles(std::move(angles), kDefaultClusterTol);
    const double scale = std::max(1.0, num.h2_norm());
    for (const auto& [theta, count] : clusters) {
      const Complex zeta = std::polar(1.0, theta);
      const CoefficientSeries linear({-zeta, Complex(1.0)});
      int mult = 0;
      while (mult < count) {
        const DivisionResult dr = divide(num, linear);
        if (dr.remainder.h2_norm() > 1e-6 * scale) break;
        num = dr.quotient;
        ++mult;
      }
      if (mult > 0) factors.push_back({normalize_angle(theta), static_cast<double>(mult)});
    }
  }
  rational_ = RationalSymbol(num, rational_.den());
  factors_ = canonicalize_factors(std::move(factors), angle_tol);
}

SingularFactorFunction::SingularFactorFunction(const CircleZeroPolynomial& a)
    : rational_(RationalSymbol::constant(Complex(1.0))) {
  std::vector<CircleFactor> factors;
  for (const ZeroAngle& z : a.zeros()) factors.push_back({z.theta, static_cast<double>(z.mult)});
  factors_ = canonicalize_factors(std::move(factors), kDefaultAngleTol);
}

SingularFactorFunction::SingularFactorFunction(const CoefficientSeries& polynomial)
    : SingularFactorFunction(RationalSymbol(polynomial), {}) {}

double SingularFactorFunction::exponent_at(double theta, double tol) const {
  for (const CircleFactor& f : factors_)
    if (angle_distance(f.theta, theta) <= tol) return f.alpha;
  return 0.0;
}

SingularFactorFunction SingularFactorFunction::times_circle(const CircleZeroPolynomial& p,
                                                            double tol) const {
  SingularFactorFunction out = *this;
  std::vector<CircleFactor> factors = out.factors_;
  for (const ZeroAngle& z : p.zeros()) factors.push_back({z.theta, static_cast<double>(z.mult)});
  out.factors_ = canonicalize_factors(std::move(factors), tol);
  return out;
}

SingularFactorFunction SingularFactorFunction::over_circle(const CircleZeroPolynomial& p,
                                                           double tol) const {
  SingularFactorFunction out = *this;
  std::vector<CircleFactor> factors = out.factors_;
  for (const ZeroAngle& z : p.zeros()) factors.push_back({z.theta, -static_cast<double>(z.mult)});
  out.factors_ = canonicalize_factors(std::move(factors), tol);
  return out;
}

bool SingularFactorFunction::is_polynomial(double tol) const {
  if (!rational_.is_polynomial()) return false;
  for (const CircleFactor& f : factors_)
    if (!is_nonnegative_integer(f.alpha, tol)) return false;
  return true;
}

CoefficientSeries SingularFactorFunction::to_series() const {
  if (!is_polynomial()) throw std::domain_error("to_series: not a polynomial");
  CoefficientSeries acc = rational_.num() * (1.0 / rational_.den().coeff(0));
  for (const CircleFactor& f : factors_) {
    const Complex root = std::polar(1.0, f.theta);
    const CoefficientSeries factor({-root, Complex(1.0)});
    const int m = static_cast<int>(std::llround(f.alpha));
    for (int k = 0; k < m; ++k) acc = acc * factor;
  }
  return acc;
}

bool SingularFactorFunction::analytic_at_angle(double theta, double tol) const {
  const double alpha = exponent_at(theta, tol);
  return alpha == 0.0 || is_nonnegative_integer(alpha, 1e-12);
}

namespace {

// Truncated product of Taylor series (mod w^len).
std::vector<Complex> jet_mul(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  const std::size_t len = a.size();
  std::vector<Complex> out(len, Complex(0.0));
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = 0; i + j < len; ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::vector<Complex> jet_reciprocal(const std::vector<Complex>& a) {
  const std::size_t len = a.size();
  if (a[0] == Complex(0.0)) throw std::domain_error("jet_reciprocal: vanishing leading term");
  std::vector<Complex> out(len, Complex(0.0));
  out[0] = 1.0 / a[0];
  for (std::size_t k = 1; k < len; ++k) {
    Complex s(0.0);
    for (std::size_t j = 1; j <= k; ++j) s += a[j] * out[k - j];
    out[k] = -s / a[0];
  }
  return out;
}

// Jet of (z - zeta)^alpha about z0 != zeta: principal branch of (z0-zeta)^alpha
// times the binomial series (1 + w/(z0-zeta))^alpha.
std::vector<Complex> jet_power_factor(Complex z0, Complex zeta, double alpha, int len) {
  const Complex base = z0 - zeta;
  const Complex lead = std::exp(alpha * std::log(base));
  std::vector<Complex> out(static_cast<std::size_t>(len), Complex(0.0));
  Complex term = lead;
  out[0] = term;
  for (int k = 1; k < len; ++k) {
    term *= Complex(alpha - (k - 1)) / (static_cast<double>(k) * base);
    out[static_cast<std::size_t>(k)] = term;
  }
  return out;
}

}  // namespace

std::vector<Complex> SingularFactorFunction::jet_at(Complex z0, int len, double tol) const {
  if (len <= 0) return {};
  std::vector<Complex> acc = rational_.num().jet(z0, len);
  acc = jet_mul(acc, jet_reciprocal(rational_.den().jet(z0, len)));
  for (const CircleFactor& f : factors_) {
    const Complex zeta = std::polar(1.0, f.theta);
    if (std::abs(z0 - zeta) <= tol) {
      if (!is_nonnegative_integer(f.alpha, 1e-12))
        throw std::domain_error("jet_at: not analytic at a fractional factor point");
      const int m = static_cast<int>(std::llround(f.alpha));
      // multiply by (z - zeta)^m = (w + (z0 - zeta))^m with z0 == zeta: w^m
      std::vector<Complex> shifted(static_cast<std::size_t>(len), Complex(0.0));
      for (int k = m; k < len; ++k) shifted[static_cast<std::size_t>(k)] = acc[static_cast<std::size_t>(k - m)];
      acc = std::move(shifted);
    } else {
      acc = jet_mul(acc, jet_power_factor(z0, zeta, f.alpha, len));
    }
  }
  return acc;
}

bool SingularFactorFunction::same_as(const SingularFactorFunction& other, double tol) const {
  if (factors_.size() != other.factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (angle_distance(factors_[i].theta, other.factors_[i].theta) > tol) return false;
    if (std::abs(factors_[i].alpha - other.factors_[i].alpha) > 1e-10) return false;
  }
  // rational parts compared up to the shared grid of a few boundary points
  for (int k = 0; k < 8; ++k) {
    const Complex z = std::polar(0.73, kTwoPi * k / 8.0 + 0.1);
    const Complex v1 = rational_.evaluate(z);
    const Complex v2 = other.rational_.evaluate(z);
    if (std::abs(v1 - v2) > 1e-8 * std::max(1.0, std::abs(v1))) return false;
  }
  return true;
}

std::string SingularFactorFunction::describe() const {
  std::ostringstream os;
  os << "rational(deg " << rational_.num().degree() << "/" << rational_.den().degree() << ")";
  for (const CircleFactor& f : factors_) os << " (z-e^{i" << f.theta << "})^" << f.alpha;
  return os.str();
}

bool hinf_membership(const SingularFactorFunction& phi) {
  for (const CircleFactor& f : phi.factors())
    if (f.alpha < 0.0) return false;
  return true;
}

bool h2_membership(const SingularFactorFunction& phi) {
  for (const CircleFactor& f : phi.factors())
    if (f.alpha <= -0.5) return false;
  return true;
}

}  // namespace mabar
