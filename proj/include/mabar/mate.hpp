#ifndef MABAR_MATE_HPP
#define MABAR_MATE_HPP

#include "mabar/symbols.hpp"

namespace mabar {

/// Boundary samples of a function at the M-th roots of unity.
struct BoundaryGrid {
  int size = 0;
  std::vector<Complex> values;
};

BoundaryGrid boundary_grid(const RationalSymbol& a, int grid_size);

// max |a| over the grid, refined by golden-section search around the grid
// maximizer; relative accuracy ~1e-10 for grid_size >= 4*degree.
double sup_norm_on_circle(const RationalSymbol& a, int grid_size = 4096);
double sup_norm_on_circle(const CircleZeroPolynomial& a, int grid_size = 4096);

/// a/(2 ||a||_inf) together with the scale. The scaled symbol has sup norm
/// 1/2, hence is a non-extreme point of the ball; the range space does not
/// change and all range norms scale linearly.
struct NormalizedSymbol {
  RationalSymbol symbol;
  double scale = 1.0;  // lambda = 2 ||a||_inf
};
NormalizedSymbol normalize_nonextreme(const RationalSymbol& a, int grid_size = 4096);

/// Pythagorean mate b: the outer function with |a|^2 + |b|^2 = 1 on the
/// circle and b(0) > 0, as a Taylor series truncated at length grid/2.
///
/// Route: 1 - |a|^2 = T(theta)/|den|^2 with T a trigonometric polynomial
/// computed exactly by coefficient convolution. The polynomial
/// P(z) = z^D T has conjugate-symmetric roots; its unit-circle roots (even
/// multiplicity 2s, confirmed by a boundary-value check before deflation)
/// are divided out exactly, so u = log(|Q|/|den|^2) is smooth and the outer
/// factor exp((u + i Hu)/2) is produced by the discrete conjugate-function
/// multiplier on the grid at spectral accuracy. The deflated zeros return as
/// the exact polynomial prod (z - zeta_i)^{s_i}, and a unimodular constant
/// fixes b(0) > 0.
struct MateResult {
  CoefficientSeries b;
  double tail_energy = 0.0;        // energy in the dropped upper half of the series
  std::vector<ZeroAngle> contact;  // boundary points where |a| = 1 (order s_i)
};
MateResult pythagorean_mate_full(const RationalSymbol& a, int grid_size = 4096);
CoefficientSeries pythagorean_mate(const RationalSymbol& a, int grid_size = 4096);

struct MateResidual {
  double residual = 0.0;  // max over the grid of | |a|^2 + |b|^2 - 1 |
  Complex b0;
  bool b0_positive = false;
};
MateResidual mate_residual(const RationalSymbol& a, const CoefficientSeries& b,
                           int grid_size = 4096);

// Winding number of p(r e^{i t}) around 0 (argument-principle zero count
// inside radius r); used to probe outerness of the mate.
double winding_number(const CoefficientSeries& p, double radius, int samples = 8192);

}  // namespace mabar

#endif  // MABAR_MATE_HPP
