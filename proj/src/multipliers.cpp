#include "mabar/multipliers.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "mabar/random.hpp"

namespace mabar {

const char* to_string(Decision d) {
  switch (d) {
    case Decision::Yes: return "yes";
    case Decision::No: return "no";
    default: return "unknown";
  }
}

namespace {

std::string hinf_obstruction(const SingularFactorFunction& phi, const std::string& what) {
  for (const CircleFactor& f : phi.factors()) {
    if (f.alpha < 0.0) {
      std::ostringstream os;
      os << what << " has exponent " << f.alpha << " at angle " << f.theta
         << ", hence is unbounded on the disk";
      return os.str();
    }
  }
  return what + " is unbounded on the disk";
}

}  // namespace

MultiplierVerdict mult_check(const CircleZeroPolynomial& a1, const CircleZeroPolynomial& a2,
                             const SingularFactorFunction& phi, double angle_tol) {
  MultiplierVerdict v;

  if (a1.same_zeros(a2, angle_tol)) {
    // multipliers of M(a-bar) into itself are exactly M(a-bar) n Hinf
    v.rule = "prop3.1";
    const MembershipResult m = membership(a1, phi, angle_tol);
    v.exponent_table = m.table;
    v.interpolant = m.interpolant;
    const bool bounded = hinf_membership(phi);
    if (m.member && bounded) {
      v.decision = Decision::Yes;
      v.witness = phi;
    } else {
      v.decision = Decision::No;
      v.obstruction = !m.member ? m.obstruction : hinf_obstruction(phi, "phi");
    }
    return v;
  }

  if (auto h = circle_divides(a1, a2, angle_tol)) {
    // zero set of a2 inside that of a1: phi in M(a2-bar) with h phi bounded
    v.rule = a2.is_one() ? "cor-M(a,1)" : "thm1.1";
    v.quotient = *h;
    const MembershipResult m = membership(a2, phi, angle_tol);
    v.exponent_table = m.table;
    v.interpolant = m.interpolant;
    const SingularFactorFunction h_phi = phi.times_circle(*h, angle_tol);
    v.witness = h_phi;
    const bool bounded = hinf_membership(h_phi);
    if (m.member && bounded) {
      v.decision = Decision::Yes;
    } else {
      v.decision = Decision::No;
      v.obstruction = !m.member ? m.obstruction : hinf_obstruction(h_phi, "h*phi");
    }
    return v;
  }

  if (auto k = circle_divides(a2, a1, angle_tol)) {
    // zero set of a1 inside that of a2: phi = k psi with psi in M(a1-bar) n Hinf
    v.rule = a1.is_one() ? "cor-M(1,a)" : "thm1.2";
    v.quotient = *k;
    const SingularFactorFunction psi = phi.over_circle(*k, angle_tol);
    v.witness = psi;
    const MembershipResult m = membership(a1, psi, angle_tol);
    v.exponent_table = m.table;
    v.interpolant = m.interpolant;
    const bool bounded = hinf_membership(psi);
    if (m.member && bounded) {
      // re-verify the factorization before answering yes
      if (!psi.times_circle(*k, angle_tol).same_as(phi, angle_tol))
        throw std::runtime_error("mult_check: witness factorization failed to reproduce phi");
      v.decision = Decision::Yes;
    } else {
      v.decision = Decision::No;
      v.obstruction = !m.member ? m.obstruction : hinf_obstruction(psi, "phi/k");
    }
    return v;
  }

  // Incomparable zero sets: the dividing-case descriptions do not apply, but
  // a2 Hinf always multiplies M(a1-bar) into M(a2-bar).
  const SingularFactorFunction quotient_by_a2 = phi.over_circle(a2, angle_tol);
  if (hinf_membership(quotient_by_a2)) {
    v.decision = Decision::Yes;
    v.rule = "sufficient-a2Hinf";
    v.witness = quotient_by_a2;
    return v;
  }
  v.decision = Decision::Unknown;
  v.rule = "none";
  v.obstruction = "zero sets are incomparable; no dividing-case description applies";
  return v;
}

OntoVerdict onto_check(const CircleZeroPolynomial& a1, const CircleZeroPolynomial& a2) {
  OntoVerdict v;
  if (a1.same_zeros(a2)) {
    v.decision = Decision::Yes;
    v.certificate =
        "onto multipliers exist: the family 1/(1 - conj(lambda) a) for |lambda| < 1/||a||_inf";
    return v;
  }
  auto quotient = circle_divides(a1, a2);
  if (!quotient) quotient = circle_divides(a2, a1);
  if (quotient) {
    // strict divisor: quotient is nonconstant and 1/quotient has circle poles
    v.decision = Decision::No;
    std::ostringstream os;
    os << "no onto multipliers: the reciprocal of the quotient " << quotient->describe()
       << " has poles on the circle and cannot belong to H^2";
    v.certificate = os.str();
    return v;
  }
  v.decision = Decision::Unknown;
  v.certificate = "zero sets are incomparable; onto question not decided";
  return v;
}

CrofootReport crofoot_verify(const CircleZeroPolynomial& a, Complex lambda, int n, int trials,
                             std::uint64_t seed) {
  if (n < 0 || trials < 1) throw std::invalid_argument("crofoot_verify: need n >= 0, trials >= 1");
  CrofootReport rep;
  rep.sup_norm = boundary_sup_norm(a.expansion(), std::max(4096, 8 * a.degree()));
  if (std::abs(lambda) * rep.sup_norm >= 1.0) {
    std::ostringstream os;
    os << "crofoot_verify: |lambda| = " << std::abs(lambda) << " is not below 1/||a||_inf = "
       << 1.0 / rep.sup_norm;
    throw std::domain_error(os.str());
  }
  rep.rho = std::abs(lambda) * rep.sup_norm;
  rep.trials = trials;
  rep.forward_bound = 1.0 + rep.rho;
  rep.inverse_bound = 1.0 / (1.0 - rep.rho);

  // truncated geometric expansion of 1/(1 - conj(lambda) a)
  int terms = 0;
  if (rep.rho > 0.0)
    terms = static_cast<int>(
        std::ceil(std::log(1e-12 * (1.0 - rep.rho)) / std::log(rep.rho)));
  rep.expansion_terms = std::max(terms, 0);
  rep.tail_bound = rep.rho == 0.0
                       ? 0.0
                       : std::pow(rep.rho, rep.expansion_terms + 1) / (1.0 - rep.rho);

  const Complex lbar = std::conj(lambda);
  const CoefficientSeries la = lbar * a.expansion();
  CoefficientSeries multiplier = CoefficientSeries::one();
  CoefficientSeries power = CoefficientSeries::one();
  for (int m = 1; m <= rep.expansion_terms; ++m) {
    power = power * la;
    multiplier += power;
  }
  const CoefficientSeries forward = CoefficientSeries::one() - la;

  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const CoefficientSeries f = random_polynomial(rng, n);
    const double nf = range_norm(a, f);
    if (nf == 0.0) continue;
    rep.max_forward_ratio = std::max(rep.max_forward_ratio, range_norm(a, forward * f) / nf);
    rep.max_inverse_ratio = std::max(rep.max_inverse_ratio, range_norm(a, multiplier * f) / nf);
  }
  return rep;
}

LinearMap mult_norm_map(const CircleZeroPolynomial& a1, const CircleZeroPolynomial& a2,
                        const CoefficientSeries& phi, int n) {
  if (n < 0) throw std::invalid_argument("mult_norm_map: n must be >= 0");
  LinearMap map;
  map.cols = n + 1;
  map.rows = n + std::max(phi.degree(), 0) + 1;
  const CoefficientSeries e1 = a1.expansion();
  const CoefficientSeries e2 = a2.expansion();
  map.apply = [e1, e2, phi, rows = map.rows](const std::vector<Complex>& x,
                                             std::vector<Complex>& y) {
    const CoefficientSeries g(std::vector<Complex>(x.begin(), x.end()));
    const CoefficientSeries prod = phi * apply_tbar_raw(e1, g);
    const CoefficientSeries out = solve_tbar_raw(e2, prod);
    y.assign(static_cast<std::size_t>(rows), Complex(0.0));
    for (int r = 0; r < rows; ++r) y[static_cast<std::size_t>(r)] = out.coeff(r);
  };
  map.apply_adjoint = [e1, e2, phi, n](const std::vector<Complex>& y, std::vector<Complex>& x) {
    const std::vector<Complex> s2 = solve_tbar_adjoint_raw(e2, y);
    const CoefficientSeries mid = apply_tbar_raw(phi, CoefficientSeries(std::vector<Complex>(s2)));
    std::vector<Complex> head(static_cast<std::size_t>(n) + 1, Complex(0.0));
    for (int k = 0; k <= n; ++k) head[static_cast<std::size_t>(k)] = mid.coeff(k);
    x = apply_tbar_adjoint_raw(e1, head);
  };
  return map;
}

double numeric_mult_norm(const CircleZeroPolynomial& a1, const CircleZeroPolynomial& a2,
                         const CoefficientSeries& phi, int n) {
  if (phi.is_zero()) return 0.0;
  return sigma_max_power(mult_norm_map(a1, a2, phi, n));
}

}  // namespace mabar
