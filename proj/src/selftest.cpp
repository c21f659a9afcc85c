#include "mabar/selftest.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "mabar/decay.hpp"
#include "mabar/mate.hpp"
#include "mabar/multipliers.hpp"
#include "mabar/random.hpp"
#include "mabar/rangespace.hpp"
#include "mabar/shiftop.hpp"

namespace mabar {

namespace {

struct Check {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "FAIL: " << what << "; ";
    }
  }
};

std::vector<CircleZeroPolynomial> corpus_symbols(Rng& rng) {
  std::vector<CircleZeroPolynomial> symbols;
  symbols.emplace_back(std::vector<ZeroAngle>{{0.0, 1}});            // z - 1
  symbols.emplace_back(std::vector<ZeroAngle>{{0.0, 1}, {kPi, 1}});  // z^2 - 1
  symbols.emplace_back(std::vector<ZeroAngle>{{0.0, 2}});            // (z - 1)^2
  symbols.push_back(random_class_a(rng, 3));
  return symbols;
}

CriterionResult criterion_shift_norm(Rng& rng, double ts) {
  Check c;
  const std::vector<int> sweep{0, 2, 8, 32, 128, 512, 2048};
  for (const CircleZeroPolynomial& a : corpus_symbols(rng)) {
    const ShiftReport rep = shift_norm_sections(a, sweep);
    double prev = 0.0;
    for (const auto& [n, sigma] : rep.section_values) {
      c.require(sigma >= prev - 1e-9 * ts, a.describe() + ": sigma decreased at n=" + std::to_string(n));
      c.require(sigma <= rep.closed_form + 1e-9 * ts,
                a.describe() + ": sigma exceeds the closed form at n=" + std::to_string(n));
      prev = sigma;
    }
    const double final_sigma = rep.section_values.back().second;
    const double rel = std::abs(final_sigma - rep.closed_form) / rep.closed_form;
    c.require(rel <= 1e-2 * ts, a.describe() + ": relative gap " + std::to_string(rel) + " at n=2048");
    c.detail << a.describe() << " closed=" << rep.closed_form << " sigma(2048)=" << final_sigma
             << "; ";
  }
  // z - 1 attains sqrt(2) at n = 0 (the maximizer is the constant)
  const CircleZeroPolynomial zm1(std::vector<ZeroAngle>{{0.0, 1}});
  const ShiftReport rep0 = shift_norm_sections(zm1, {0});
  c.require(std::abs(rep0.section_values[0].second - std::sqrt(2.0)) <= 1e-12 * ts,
            "z-1 at n=0 is not sqrt(2) exactly");
  CriterionResult r;
  r.name = "shift-norm";
  r.pass = c.pass;
  r.detail = c.detail.str();
  return r;
}

CriterionResult criterion_proof_identities(Rng& rng, double ts) {
  Check c;
  for (const CircleZeroPolynomial& a : corpus_symbols(rng)) {
    c.require(norm_one_identity_residual(a) <= 1e-12 * ts, a.describe() + ": ||1|| identity");
    c.require(tbar_ba_identity_residual(a) <= 1e-12 * ts, a.describe() + ": ||T Ba||^2 identity");
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
      const CoefficientSeries f = random_polynomial(rng, rng.uniform_int(0, 12));
      worst = std::max(worst, shift_identity_residual(a, f));
    }
    c.require(worst <= 1e-10 * ts, a.describe() + ": shift identity residual " + std::to_string(worst));
    c.detail << a.describe() << " worst=" << worst << "; ";
  }
  CriterionResult r;
  r.name = "proof-identities";
  r.pass = c.pass;
  r.detail = c.detail.str();
  return r;
}

CriterionResult criterion_adjoint(Rng& rng, double ts) {
  Check c;
  for (const CircleZeroPolynomial& a : corpus_symbols(rng)) {
    const double res = adjoint_residual(a, 32);
    c.require(res <= 1e-10 * ts, a.describe() + ": adjoint residual " + std::to_string(res));
    c.detail << a.describe() << " residual=" << res << "; ";
  }
  CriterionResult r;
  r.name = "adjoint";
  r.pass = c.pass;
  r.detail = c.detail.str();
  return r;
}

CriterionResult criterion_reproducing(Rng& rng, double ts) {
  Check c;
  const CircleZeroPolynomial zm1(std::vector<ZeroAngle>{{0.0, 1}});
  const double exact = reproducing_residual(zm1, CoefficientSeries::one(), Complex(0.0), 1);
  c.require(exact <= 1e-12 * ts, "hand case a=z-1, lambda=0, f=1");
  c.detail << "hand residual=" << exact << "; ";

  double worst = 0.0;
  for (const CircleZeroPolynomial& a : corpus_symbols(rng)) {
    for (int deg = 0; deg <= 3; ++deg) {
      const CoefficientSeries f = random_polynomial(rng, deg);
      for (int ring = 0; ring < 2; ++ring) {
        const double radius = ring == 0 ? 0.9 : 0.45;
        for (int arc = 0; arc < 4; ++arc) {
          const Complex lambda = std::polar(radius, kTwoPi * arc / 4.0 + 0.37);
          worst = std::max(worst, reproducing_residual(a, f, lambda));
        }
      }
      worst = std::max(worst, reproducing_residual(a, f, Complex(0.0)));
    }
  }
  c.require(worst <= 1e-8 * ts, "auto-truncated residual " + std::to_string(worst));
  c.detail << "worst=" << worst << "; ";
  CriterionResult r;
  r.name = "reproducing";
  r.pass = c.pass;
  r.detail = c.detail.str();
  return r;
}

CriterionResult criterion_decomposition(Rng& rng, double ts) {
  Check c;
  double worst_recombine = 0.0, worst_agree = 0.0;
  for (int t = 0; t < 500; ++t) {
    const CircleZeroPolynomial a = random_class_a(rng, rng.uniform_int(1, 6));
    const CoefficientSeries f = random_polynomial(rng, rng.uniform_int(0, 20));
    const Decomposition d1 = decompose(a, f);
    const Decomposition d2 = decompose_by_division(a, f);
    worst_recombine = std::max(
        worst_recombine, max_coeff_distance(a.expansion() * d1.f_tilde + d1.p, f));
    worst_agree = std::max(worst_agree, max_coeff_distance(d1.p, d2.p));
  }
  c.require(worst_recombine <= 1e-10 * ts, "recombination residual " + std::to_string(worst_recombine));
  c.require(worst_agree <= 1e-10 * ts, "interpolation/division gap " + std::to_string(worst_agree));
  c.detail << "recombine=" << worst_recombine << " agreement=" << worst_agree << "; ";
  CriterionResult r;
  r.name = "decomposition";
  r.pass = c.pass;
  r.detail = c.detail.str();
  return r;
}

CriterionResult criterion_isometry(Rng& rng, double ts) {
  Check c;
  std::vector<CircleZeroPolynomial> symbols = corpus_symbols(rng);
  symbols.push_back(random_class_a(rng, 6));
  for (const CircleZeroPolynomial& a : symbols) {
    const SigmaExtremes se = equivalence_bounds(a, 64);
    c.require(std::abs(se.max - 1.0) <= 1e-10 * ts && std::abs(se.min - 1.0) <= 1e-10 * ts,
              a.describe() + ": bounds (" + std::to_string(se.max) + "," +
                  std::to_string(se.min) + ")");
    // brute-force twist identity on degrees <= 8
    double worst = 0.0;
    for (int deg = 0; deg <= 8; ++deg) {
      const CoefficientSeries f = random_polynomial(rng, deg);
      const CoefficientSeries lhs = preimage(a, a.expansion() * f);
      const CoefficientSeries rhs =
          a.constant_term() * (CoefficientSeries::monomial(a.degree()) * f);
      worst = std::max(worst, max_coeff_distance(lhs, rhs) / std::max(1.0, f.h2_norm()));
    }
    c.require(worst <= 1e-12 * ts, a.describe() + ": twist identity deviation " + std::to_string(worst));
    c.detail << a.describe() << " twist=" << worst << "; ";
  }
  CriterionResult r;
  r.name = "isometry";
  r.pass = c.pass;
  r.detail = c.detail.str();
  return r;
}

struct OracleCase {
  CircleZeroPolynomial a1, a2;
  CoefficientSeries phi;                 // coefficients for the numeric oracle
  SingularFactorFunction phi_singular;   // exact factored form for the verdict
  bool expect_yes = false;
};

CriterionResult criterion_multipliers(Rng& rng, double) {
  Check c;

  // The unbounded multiplier example between distinct spaces, eps = 0.1.
  const CircleZeroPolynomial a1(std::vector<ZeroAngle>{{0.0, 1}, {kPi, 1}});
  const CircleZeroPolynomial a2(std::vector<ZeroAngle>{{kPi, 1}});
  const SingularFactorFunction phi(RationalSymbol::constant(Complex(1.0)),
                                   {{kPi, 0.6}, {0.0, -0.4}});
  const MultiplierVerdict v = mult_check(a1, a2, phi);
  c.require(v.decision == Decision::Yes && v.rule == "thm1.1",
            "example verdict: got " + std::string(to_string(v.decision)) + "/" + v.rule);
  c.require(!hinf_membership(phi), "example phi must be unbounded");
  c.require(!membership(a1, phi).member, "example phi must fail membership in M(a1-bar)");

  // Twenty positives and twenty negatives through the two corollaries, each
  // cross-checked against the finite-section norm growth.
  const CircleZeroPolynomial one = CircleZeroPolynomial::one();
  std::vector<OracleCase> cases;
  for (int t = 0; t < 10; ++t) {  // phi in a Hinf, multiplier of H^2 into M(a-bar)
    OracleCase oc;
    oc.a1 = one;
    oc.a2 = random_class_a(rng, rng.uniform_int(1, 2));
    const CoefficientSeries q = random_polynomial(rng, rng.uniform_int(0, 3));
    oc.phi = oc.a2.expansion() * q;
    oc.phi_singular = SingularFactorFunction(q).times_circle(oc.a2);
    oc.expect_yes = true;
    cases.push_back(oc);
  }
  for (int t = 0; t < 10; ++t) {  // polynomials multiply M(a-bar) into H^2
    OracleCase oc;
    oc.a1 = random_class_a(rng, rng.uniform_int(1, 2));
    oc.a2 = one;
    oc.phi = random_polynomial(rng, rng.uniform_int(0, 5));
    oc.phi_singular = SingularFactorFunction(oc.phi);
    oc.expect_yes = true;
    cases.push_back(oc);
  }
  int negatives = 0;
  while (negatives < 20) {  // polynomials not divisible by a miss a Hinf
    OracleCase oc;
    oc.a1 = one;
    oc.a2 = random_class_a(rng, rng.uniform_int(1, 2));
    oc.phi = random_polynomial(rng, rng.uniform_int(0, 4));
    double min_at_zero = 1e300;
    for (const ZeroAngle& z : oc.a2.zeros())
      min_at_zero = std::min(min_at_zero, std::abs(oc.phi.evaluate(std::polar(1.0, z.theta))));
    if (min_at_zero < 0.2) continue;  // keep the obstruction well conditioned
    oc.phi_singular = SingularFactorFunction(oc.phi);
    oc.expect_yes = false;
    cases.push_back(oc);
    ++negatives;
  }

  const std::vector<int> levels{64, 256, 1024};
  int idx = 0;
  for (const OracleCase& oc : cases) {
    const MultiplierVerdict verdict = mult_check(oc.a1, oc.a2, oc.phi_singular);
    c.require((verdict.decision == Decision::Yes) == oc.expect_yes,
              "case " + std::to_string(idx) + ": verdict " + to_string(verdict.decision) +
                  " but expected " + (oc.expect_yes ? "yes" : "no"));
    double prev = 0.0, max_growth = 0.0;
    for (int n : levels) {
      const double sigma = numeric_mult_norm(oc.a1, oc.a2, oc.phi, n);
      if (prev > 0.0) max_growth = std::max(max_growth, sigma / prev);
      prev = sigma;
    }
    if (oc.expect_yes)
      c.require(max_growth < 1.05, "case " + std::to_string(idx) + ": positive grew by " +
                                       std::to_string(max_growth));
    else
      c.require(max_growth > 1.05, "case " + std::to_string(idx) + ": negative grew only by " +
                                       std::to_string(max_growth));
    ++idx;
  }
  c.detail << "example rule=" << v.rule << ", " << cases.size() << " oracle cases; ";
  CriterionResult r;
  r.name = "multiplier-theorems";
  r.pass = c.pass;
  r.detail = c.detail.str();
  return r;
}

CriterionResult criterion_onto(Rng& rng, double) {
  Check c;
  for (int t = 0; t < 10; ++t) {
    const CircleZeroPolynomial small = random_class_a(rng, rng.uniform_int(1, 2));
    const CircleZeroPolynomial extra = random_class_a(rng, rng.uniform_int(1, 2), 0.4);
    std::vector<ZeroAngle> combined = small.zeros();
    for (const ZeroAngle& z : extra.zeros()) combined.push_back(z);
    const CircleZeroPolynomial big(combined, 0.05);
    if (big.same_zeros(small)) continue;
    c.require(onto_check(big, small).decision == Decision::No, "strict divisor pair (big, small)");
    c.require(onto_check(small, big).decision == Decision::No, "strict divisor pair (small, big)");
  }
  for (int t = 0; t < 5; ++t) {
    const CircleZeroPolynomial a = random_class_a(rng, rng.uniform_int(1, 3));
    c.require(onto_check(a, a).decision == Decision::Yes, "same symbol must admit the family");
    const double sup = sup_norm_on_circle(a);
    const Complex lambda = std::polar(0.8 / sup, rng.uniform(0.0, kTwoPi));
    const CrofootReport rep = crofoot_verify(a, lambda, 24, 20, rng.next_u64());
    c.require(rep.max_inverse_ratio <= rep.inverse_bound + 1e-6 + rep.tail_bound,
              "inverse ratio " + std::to_string(rep.max_inverse_ratio) + " above bound " +
                  std::to_string(rep.inverse_bound));
    c.require(rep.max_forward_ratio <= rep.forward_bound + 1e-9,
              "forward ratio " + std::to_string(rep.max_forward_ratio) + " above bound " +
                  std::to_string(rep.forward_bound));
    c.detail << "crofoot rho=" << rep.rho << " inv=" << rep.max_inverse_ratio << "; ";
  }
  const CircleZeroPolynomial zp(std::vector<ZeroAngle>{{0.0, 1}});
  const CircleZeroPolynomial zq(std::vector<ZeroAngle>{{kPi, 1}});
  c.require(onto_check(zp, zq).decision == Decision::Unknown, "incomparable pair must be unknown");
  const CircleZeroPolynomial zr(std::vector<ZeroAngle>{{1.0, 1}, {2.0, 1}});
  const CircleZeroPolynomial zs(std::vector<ZeroAngle>{{1.0, 1}, {4.0, 1}});
  c.require(onto_check(zr, zs).decision == Decision::Unknown, "incomparable pair must be unknown");
  CriterionResult r;
  r.name = "onto";
  r.pass = c.pass;
  r.detail = c.detail.str();
  return r;
}

CriterionResult criterion_mate(Rng& rng, double ts) {
  Check c;
  // a = (1-z)/2 has mate (1+z)/2
  const RationalSymbol half_one_minus_z(CoefficientSeries({0.5, -0.5}));
  const CoefficientSeries b = pythagorean_mate(half_one_minus_z);
  const double coeff_err =
      max_coeff_distance(b.trimmed(1e-11), CoefficientSeries({0.5, 0.5}));
  c.require(coeff_err <= 1e-8 * ts, "mate of (1-z)/2: coefficient error " + std::to_string(coeff_err));
  c.detail << "(1-z)/2 coeff_err=" << coeff_err << "; ";

  double worst = 0.0;
  for (int t = 0; t < 10; ++t) {
    const RationalSymbol raw = random_rational(rng, rng.uniform_int(1, 5), rng.uniform_int(0, 2));
    const NormalizedSymbol scaled = normalize_nonextreme(raw);
    const MateResult m = pythagorean_mate_full(scaled.symbol);
    const MateResidual res = mate_residual(scaled.symbol, m.b);
    worst = std::max(worst, res.residual);
    c.require(res.b0_positive, "b(0) must be positive");
  }
  c.require(worst <= 1e-8 * ts, "grid residual " + std::to_string(worst));
  c.detail << "worst grid residual=" << worst << "; ";
  CriterionResult r;
  r.name = "mate";
  r.pass = c.pass;
  r.detail = c.detail.str();
  return r;
}

CriterionResult criterion_decay(Rng&, double ts) {
  Check c;
  for (double cc : {0.5, 1.0, 2.0}) {
    const DecayFit fit = decay_fit(sample_class_F(cc, 4096), {64, 4096});
    c.require(std::abs(fit.c - cc) <= 0.02 * cc * ts,
              "roundtrip c=" + std::to_string(cc) + " got " + std::to_string(fit.c));
    c.detail << "c=" << cc << " fit=" << fit.c << "; ";
  }
  const std::vector<CircleZeroPolynomial> symbols{
      CircleZeroPolynomial(std::vector<ZeroAngle>{{0.0, 1}}),
      CircleZeroPolynomial(std::vector<ZeroAngle>{{0.0, 1}, {kPi, 1}}),
      CircleZeroPolynomial(std::vector<ZeroAngle>{{0.0, 2}})};
  const std::vector<ProbeRow> rows =
      universal_mult_probe(sample_class_F(1.0, 512), symbols, {64, 256, 1024});
  for (const ProbeRow& row : rows) {
    c.require(row.growth < 1.05, row.symbol + " n=" + std::to_string(row.n) + " growth " +
                                     std::to_string(row.growth));
    c.detail << row.symbol << " n=" << row.n << " sigma=" << row.sigma << "; ";
  }
  CriterionResult r;
  r.name = "decay";
  r.pass = c.pass;
  r.detail = c.detail.str();
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed, const std::string& only,
                                            double tolerance_scale) {
  using Runner = CriterionResult (*)(Rng&, double);
  const std::vector<std::pair<std::string, Runner>> criteria{
      {"shift-norm", &criterion_shift_norm},
      {"proof-identities", &criterion_proof_identities},
      {"adjoint", &criterion_adjoint},
      {"reproducing", &criterion_reproducing},
      {"decomposition", &criterion_decomposition},
      {"isometry", &criterion_isometry},
      {"multiplier-theorems", &criterion_multipliers},
      {"onto", &criterion_onto},
      {"mate", &criterion_mate},
      {"decay", &criterion_decay},
  };
  std::vector<CriterionResult> results;
  int index = 1;
  for (const auto& [name, runner] : criteria) {
    if (!only.empty() && name.find(only) == std::string::npos) {
      ++index;
      continue;
    }
    Rng rng(seed + static_cast<std::uint64_t>(index));  // independent per criterion
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r = runner(rng, tolerance_scale);
    r.index = index++;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace mabar
