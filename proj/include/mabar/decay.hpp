#ifndef MABAR_DECAY_HPP
#define MABAR_DECAY_HPP

#include "mabar/multipliers.hpp"

namespace mabar {

struct DecayWindow {
  int n0 = 0;
  int n1 = 0;
};

/// Least-squares fit of log|psi_hat(n)| = logC - c sqrt(n) over the window,
/// zero coefficients excluded. A separate log-linear-in-n fit flags geometric
/// (superexponential in sqrt n) decay, where the sqrt model fits poorly.
struct DecayFit {
  double c = 0.0;
  double log_c = 0.0;
  double residual = 0.0;  // RMS of the sqrt-model fit
  DecayWindow window;
  int samples = 0;
  bool geometric = false;
  double geometric_rate = 0.0;    // slope of log|coef| against n when geometric
  double geometric_residual = 0.0;
};

DecayFit decay_fit(const CoefficientSeries& psi, DecayWindow window);

// Convention for membership in the decay class: healthy sqrt-fit with a
// clearly positive rate, or detected geometric decay (which is faster).
bool in_decay_class(const DecayFit& fit, double min_c = 0.05, double max_residual = 0.5);

// Coefficients e^{-c sqrt(k)}, k = 0..n.
CoefficientSeries sample_class_F(double c, int n);

struct ProbeRow {
  std::string symbol;
  int n = 0;
  double sigma = 0.0;
  double growth = 1.0;  // sigma(n_i)/sigma(n_{i-1}) within the same symbol
  bool flagged = false;
};

// numeric_mult_norm(a, a, psi, n) across symbols and truncations; growth
// ratios above the threshold are flagged as evidence against membership.
std::vector<ProbeRow> universal_mult_probe(const CoefficientSeries& psi,
                                           const std::vector<CircleZeroPolynomial>& symbols,
                                           const std::vector<int>& n_list,
                                           double growth_threshold = 1.05);

}  // namespace mabar

#endif  // MABAR_DECAY_HPP
