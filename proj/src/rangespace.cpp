#include "mabar/rangespace.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mabar {

namespace {

// Confluent node list: each zero angle repeated to its multiplicity,
// angle-sorted (the zeros() list is already sorted).
struct NodeData {
  std::vector<Complex> nodes;
  std::vector<std::vector<Complex>> jets;  // per distinct zero: Taylor coeffs of f
  std::vector<int> jet_index;              // node -> (zero index, derivative order)
  std::vector<int> jet_order;
};

// Newton-form Hermite interpolant from confluent divided differences.
// Repeated nodes take f^{(k)}(z)/k! directly from the jet.
CoefficientSeries hermite_from_jets(const std::vector<ZeroAngle>& zeros,
                                    const std::vector<std::vector<Complex>>& jets) {
  std::vector<Complex> nodes;
  std::vector<int> which;
  std::vector<int> order;
  for (std::size_t zi = 0; zi < zeros.size(); ++zi) {
    const Complex zeta = std::polar(1.0, zeros[zi].theta);
    for (int k = 0; k < zeros[zi].mult; ++k) {
      nodes.push_back(zeta);
      which.push_back(static_cast<int>(zi));
      order.push_back(k);
    }
  }
  const std::size_t n = nodes.size();
  if (n == 0) return CoefficientSeries();

  // dd[i] holds the current column of the divided-difference table.
  std::vector<Complex> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = jets[static_cast<std::size_t>(which[i])][0];
  std::vector<Complex> newton(n);
  newton[0] = dd[0];
  for (std::size_t col = 1; col < n; ++col) {
    for (std::size_t i = 0; i + col < n; ++i) {
      const Complex lo = nodes[i];
      const Complex hi = nodes[i + col];
      if (which[i] == which[i + col]) {
        // all nodes in the range coincide: f^{(col)}(z)/col!
        dd[i] = jets[static_cast<std::size_t>(which[i])][col];
      } else {
        dd[i] = (dd[i + 1] - dd[i]) / (hi - lo);
      }
    }
    newton[col] = dd[0];
  }

  // Expand Newton form sum_j newton[j] prod_{l<j} (z - nodes[l]).
  CoefficientSeries p;
  CoefficientSeries basis = CoefficientSeries::one();
  for (std::size_t j = 0; j < n; ++j) {
    p += newton[j] * basis;
    if (j + 1 < n) basis = basis * CoefficientSeries({-nodes[j], Complex(1.0)});
  }
  return p;
}

double vandermonde_condition(const CircleZeroPolynomial& a) {
  const int n = a.degree();
  if (n <= 1) return 1.0;
  // Rows are the Hermite evaluation functionals p -> p^{(k)}(zeta)/k! applied
  // to the monomial basis.
  std::vector<Complex> m(static_cast<std::size_t>(n) * n, Complex(0.0));
  int row = 0;
  for (const ZeroAngle& z : a.zeros()) {
    const Complex zeta = std::polar(1.0, z.theta);
    for (int k = 0; k < z.mult; ++k, ++row) {
      for (int c = k; c < n; ++c) {
        // binom(c, k) zeta^{c-k}
        double binom = 1.0;
        for (int t = 0; t < k; ++t) binom *= static_cast<double>(c - t) / (t + 1);
        m[static_cast<std::size_t>(c) * n + row] = binom * std::pow(zeta, c - k);
      }
    }
  }
  const SigmaExtremes se = sigma_extremes_dense(m, n, n);
  return se.min > 0.0 ? se.max / se.min : std::numeric_limits<double>::infinity();
}

}  // namespace

namespace {

CoefficientSeries hermite_interpolant(const CircleZeroPolynomial& a,
                                      const CoefficientSeries& f) {
  std::vector<std::vector<Complex>> jets;
  for (const ZeroAngle& z : a.zeros())
    jets.push_back(f.jet(std::polar(1.0, z.theta), z.mult));
  return hermite_from_jets(a.zeros(), jets);
}

}  // namespace

Decomposition decompose(const CircleZeroPolynomial& a, const CoefficientSeries& f) {
  Decomposition out;
  if (f.is_zero()) return out;  // (0, 0)
  if (a.is_one()) {
    out.f_tilde = f;
    return out;
  }
  out.p = hermite_interpolant(a, f);
  // one refinement pass: interpolate what is left over (clustered zeros
  // amplify rounding in the divided differences)
  out.p += hermite_interpolant(a, f - out.p);
  out.interpolant_condition = vandermonde_condition(a);

  const DivisionResult dr = divide(f - out.p, a.expansion());
  const double scale = std::max(1.0, f.h2_norm());
  if (dr.remainder.h2_norm() > 1e-6 * scale) {
    std::ostringstream os;
    os << "decompose: interpolation/division mismatch, remainder " << dr.remainder.h2_norm();
    throw std::runtime_error(os.str());
  }
  // The division leaves a rounding-level remainder of degree < N; folding it
  // into p keeps the splitting exact without leaving the summand space.
  out.f_tilde = dr.quotient;
  out.p += dr.remainder;
  out.division_residual = max_coeff_distance(a.expansion() * out.f_tilde + out.p, f);
  return out;
}

Decomposition decompose_by_division(const CircleZeroPolynomial& a, const CoefficientSeries& f) {
  Decomposition out;
  if (f.is_zero()) return out;
  if (a.is_one()) {
    out.f_tilde = f;
    return out;
  }
  const DivisionResult dr = divide(f, a.expansion());
  const CoefficientSeries err = f - (a.expansion() * dr.quotient + dr.remainder);
  const DivisionResult fix = divide(err, a.expansion());
  out.f_tilde = dr.quotient + fix.quotient;
  out.p = dr.remainder + fix.remainder;
  out.division_residual = max_coeff_distance(a.expansion() * out.f_tilde + out.p, f);
  return out;
}

MembershipResult membership(const CircleZeroPolynomial& a, const SingularFactorFunction& phi,
                            double angle_tol) {
  MembershipResult out;
  out.member = true;
  bool all_analytic = true;

  // entries for each zero of a
  for (const ZeroAngle& z : a.zeros()) {
    ExponentEntry e;
    e.theta = z.theta;
    e.zero_mult = z.mult;
    e.alpha = phi.exponent_at(z.theta, angle_tol);
    e.analytic = phi.analytic_at_angle(z.theta, angle_tol);
    e.required = z.mult - 0.5;
    e.ok = e.analytic || e.alpha > e.required;
    if (!e.analytic) all_analytic = false;
    if (!e.ok && out.obstruction.empty()) {
      std::ostringstream os;
      os << "exponent " << e.alpha << " at angle " << e.theta << " is not > " << e.required
         << " (zero of multiplicity " << z.mult << ")";
      out.obstruction = os.str();
    }
    out.member = out.member && e.ok;
    out.table.push_back(e);
  }

  // fractional behavior away from the zeros of a must be square integrable
  for (const CircleFactor& cf : phi.factors()) {
    bool at_zero_of_a = false;
    for (const ZeroAngle& z : a.zeros())
      if (angle_distance(z.theta, cf.theta) <= angle_tol) at_zero_of_a = true;
    if (at_zero_of_a) continue;
    ExponentEntry e;
    e.theta = cf.theta;
    e.zero_mult = 0;
    e.alpha = cf.alpha;
    e.analytic = phi.analytic_at_angle(cf.theta, angle_tol);
    e.required = -0.5;
    e.ok = e.analytic || e.alpha > e.required;
    if (!e.ok && out.obstruction.empty()) {
      std::ostringstream os;
      os << "exponent " << e.alpha << " at angle " << e.theta
         << " is not > -1/2 (square integrability)";
      out.obstruction = os.str();
    }
    out.member = out.member && e.ok;
    out.table.push_back(e);
  }

  if (out.member && all_analytic && !a.is_one()) {
    std::vector<std::vector<Complex>> jets;
    for (const ZeroAngle& z : a.zeros())
      jets.push_back(phi.jet_at(std::polar(1.0, z.theta), z.mult, angle_tol));
    out.interpolant = hermite_from_jets(a.zeros(), jets);
  }
  return out;
}

SigmaExtremes equivalence_bounds(const CircleZeroPolynomial& a, int n) {
  if (n < 0) throw std::invalid_argument("equivalence_bounds: n must be >= 0");
  const int rows = n + a.degree() + 1;
  const int cols = n + 1;
  std::vector<Complex> m(static_cast<std::size_t>(rows) * cols, Complex(0.0));
  for (int c = 0; c < cols; ++c) {
    const CoefficientSeries g = preimage(a, a.expansion() * CoefficientSeries::monomial(c));
    for (int r = 0; r < rows; ++r) m[static_cast<std::size_t>(c) * rows + r] = g.coeff(r);
  }
  return sigma_extremes_dense(m, rows, cols);
}

double direct_sum_angle(const CircleZeroPolynomial& a, int n) {
  const int np = a.degree();
  if (np == 0) return kPi / 2.0;
  // Preimage coordinates: orthonormalize both blocks, then the largest
  // singular value of Q1^H Q2 is cos of the smallest principal angle.
  const int rows = n + np + 1;
  std::vector<std::vector<Complex>> left;   // preimages of a z^k, k <= n
  std::vector<std::vector<Complex>> right;  // preimages of z^j, j < N
  auto to_vec = [rows](const CoefficientSeries& s) {
    std::vector<Complex> v(static_cast<std::size_t>(rows), Complex(0.0));
    for (int r = 0; r < rows; ++r) v[static_cast<std::size_t>(r)] = s.coeff(r);
    return v;
  };
  for (int k = 0; k <= n; ++k)
    left.push_back(to_vec(preimage(a, a.expansion() * CoefficientSeries::monomial(k))));
  for (int j = 0; j < np; ++j)
    right.push_back(to_vec(preimage(a, CoefficientSeries::monomial(j))));

  auto orthonormalize = [](std::vector<std::vector<Complex>>& basis) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t j = 0; j < i; ++j) {
          Complex proj(0.0);
          for (std::size_t t = 0; t < basis[i].size(); ++t)
            proj += basis[i][t] * std::conj(basis[j][t]);
          for (std::size_t t = 0; t < basis[i].size(); ++t) basis[i][t] -= proj * basis[j][t];
        }
      }
      double nn = 0.0;
      for (const Complex& c : basis[i]) nn += std::norm(c);
      nn = std::sqrt(nn);
      for (Complex& c : basis[i]) c /= nn;
    }
  };
  orthonormalize(left);
  orthonormalize(right);

  std::vector<Complex> cross(left.size() * right.size(), Complex(0.0));
  for (std::size_t c = 0; c < right.size(); ++c)
    for (std::size_t r = 0; r < left.size(); ++r) {
      Complex s(0.0);
      for (std::size_t t = 0; t < left[r].size(); ++t) s += std::conj(left[r][t]) * right[c][t];
      cross[c * left.size() + r] = s;
    }
  const SigmaExtremes se = sigma_extremes_dense(cross, static_cast<int>(left.size()),
                                                static_cast<int>(right.size()));
  return std::acos(std::min(1.0, se.max));
}

}  // namespace mabar
