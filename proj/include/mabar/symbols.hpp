#ifndef MABAR_SYMBOLS_HPP
#define MABAR_SYMBOLS_HPP

#include <optional>
#include <string>
#include <vector>

#include "mabar/series.hpp"

namespace mabar {

constexpr double kDefaultAngleTol = 1e-9;     // radians, zero-multiset matching
constexpr double kDefaultModulusTol = 1e-8;   // |root| vs 1, circle filter
constexpr double kDefaultClusterTol = 1e-5;   // radians, multiplicity clustering

struct ZeroAngle {
  double theta;  // in [0, 2*pi)
  int mult;      // >= 1
};

/// Monic polynomial prod (z - e^{i theta_j})^{m_j} with every zero on the unit
/// circle. Roots are stored as angles, so unit modulus is structural and
/// |a(0)| = 1 by construction. Degree 0 encodes the constant symbol 1.
class CircleZeroPolynomial {
 public:
  CircleZeroPolynomial();  // a == 1
  explicit CircleZeroPolynomial(std::vector<ZeroAngle> zeros,
                                double angle_tol = kDefaultAngleTol);

  static CircleZeroPolynomial one();

  int degree() const { return degree_; }  // N = sum of multiplicities
  bool is_one() const { return degree_ == 0; }
  const std::vector<ZeroAngle>& zeros() const { return zeros_; }

  // a(0) = (-1)^N exp(i sum m_j theta_j), computed in angle form.
  Complex constant_term() const;
  const CoefficientSeries& expansion() const { return expansion_; }
  Complex evaluate(Complex z) const;  // product form

  bool same_zeros(const CircleZeroPolynomial& other, double tol = kDefaultAngleTol) const;
  std::string describe() const;  // e.g. "(z-e^{i0})^2 (z-e^{i3.14159})"

 private:
  std::vector<ZeroAngle> zeros_;  // sorted by angle, angles pairwise distinct
  int degree_ = 0;
  CoefficientSeries expansion_;
};

/// Quotient of polynomials, analytic on a neighborhood of the closed disk:
/// the denominator is checked to have no roots with |z| <= 1.
class RationalSymbol {
 public:
  RationalSymbol();  // the constant 1
  RationalSymbol(CoefficientSeries num, CoefficientSeries den);
  explicit RationalSymbol(CoefficientSeries num);

  static RationalSymbol constant(Complex c);

  const CoefficientSeries& num() const { return num_; }
  const CoefficientSeries& den() const { return den_; }
  bool is_polynomial() const { return den_.degree() == 0; }
  Complex evaluate(Complex z) const { return num_.evaluate(z) / den_.evaluate(z); }

 private:
  CoefficientSeries num_;
  CoefficientSeries den_;
};

struct CircleFactor {
  double theta;  // in [0, 2*pi)
  double alpha;  // real exponent of (z - e^{i theta})^alpha
};

/// rationalPart(z) * prod (z - e^{i theta_i})^{alpha_i} with the e^{i theta_i}
/// on the circle: the candidate-multiplier class. All circle behavior lives in
/// the factor list; integer-order circle zeros of a rational input are folded
/// into it on construction. Powers use the principal branch on the disk, but
/// every membership decision below depends on moduli only.
class SingularFactorFunction {
 public:
  SingularFactorFunction();  // constant 1
  SingularFactorFunction(RationalSymbol rational_part, std::vector<CircleFactor> factors,
                         double modulus_tol = kDefaultModulusTol,
                         double angle_tol = kDefaultAngleTol);
  explicit SingularFactorFunction(const CircleZeroPolynomial& a);
  explicit SingularFactorFunction(const CoefficientSeries& polynomial);

  const RationalSymbol& rational_part() const { return rational_; }
  const std::vector<CircleFactor>& factors() const { return factors_; }

  double exponent_at(double theta, double tol = kDefaultAngleTol) const;

  SingularFactorFunction times_circle(const CircleZeroPolynomial& p,
                                      double tol = kDefaultAngleTol) const;
  SingularFactorFunction over_circle(const CircleZeroPolynomial& p,
                                     double tol = kDefaultAngleTol) const;

  // True when every factor exponent is a nonnegative integer; then the
  // function is a polynomial divided by den and, when den is constant,
  // to_series() returns its coefficients.
  bool is_polynomial(double tol = 1e-12) const;
  CoefficientSeries to_series() const;

  // Taylor coefficients about z0, length len. Requires local analyticity:
  // no fractional or negative exponent at z0 when z0 sits on a factor point.
  std::vector<Complex> jet_at(Complex z0, int len, double tol = kDefaultAngleTol) const;
  bool analytic_at_angle(double theta, double tol = kDefaultAngleTol) const;

  bool same_as(const SingularFactorFunction& other, double tol = kDefaultAngleTol) const;
  std::string describe() const;

 private:
  RationalSymbol rational_;            // nonvanishing and pole-free on the circle
  std::vector<CircleFactor> factors_;  // sorted by angle, angles pairwise distinct
};

// --- operations ---

// Coefficient expansion of prod (z - e^{i theta_j})^{m_j}.
CoefficientSeries expand(const CircleZeroPolynomial& a);

// The circle-zero part a-check of a rational symbol: numerator roots with
// | |root| - 1 | <= tol, multiplicities recovered by clustering.
CircleZeroPolynomial reduce(const RationalSymbol& a, double tol = kDefaultModulusTol,
                            double cluster_tol = kDefaultClusterTol);

// a1/a2 as a CircleZeroPolynomial when the zero multiset of a2 is contained
// in that of a1 (angle-matched within tol); empty otherwise.
std::optional<CircleZeroPolynomial> circle_divides(const CircleZeroPolynomial& a1,
                                                   const CircleZeroPolynomial& a2,
                                                   double tol = kDefaultAngleTol);

// phi bounded on the disk <=> every circle exponent >= 0.
bool hinf_membership(const SingularFactorFunction& phi);

// phi in H^2 <=> every circle exponent > -1/2.
bool h2_membership(const SingularFactorFunction& phi);

// Roots of a polynomial via companion-matrix eigenvalues. Throws on
// eigensolver failure (message carries the residual).
std::vector<Complex> polynomial_roots(const CoefficientSeries& p);

double normalize_angle(double theta);
// |theta1 - theta2| on the circle (wraparound-aware).
double angle_distance(double theta1, double theta2);

// Clusters angles within tol, wraparound-aware (circular running means, and
// a final merge across the +-pi seam). Returns (mean angle, count) pairs.
std::vector<std::pair<double, int>> cluster_circle_angles(std::vector<double> angles,
                                                          double tol);

}  // namespace mabar

#endif  // MABAR_SYMBOLS_HPP
