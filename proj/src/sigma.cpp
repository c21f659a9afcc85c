#include "mabar/sigma.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <stdexcept>

namespace mabar {

namespace {

double norm2(const std::vector<Complex>& v) {
  double s = 0.0;
  for (const Complex& c : v) s += std::norm(c);
  return std::sqrt(s);
}

// splitmix64, so start vectors do not depend on the standard library's
// distribution implementations.
std::uint64_t splitmix(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double unit_double(std::uint64_t& state) {
  return static_cast<double>(splitmix(state) >> 11) * 0x1.0p-53;
}

}  // namespace

double sigma_max_power(const LinearMap& map, double tol, int max_iter, std::uint64_t seed) {
  if (map.cols <= 0 || map.rows <= 0) return 0.0;
  std::uint64_t state = seed;
  std::vector<Complex> v(static_cast<std::size_t>(map.cols));
  for (Complex& c : v) c = Complex(unit_double(state) - 0.5, unit_double(state) - 0.5);
  double nv = norm2(v);
  if (nv == 0.0) {
    v[0] = Complex(1.0);
    nv = 1.0;
  }
  for (Complex& c : v) c /= nv;

  std::vector<Complex> w(static_cast<std::size_t>(map.rows));
  std::vector<Complex> back(static_cast<std::size_t>(map.cols));
  double sigma = 0.0;
  int settled = 0;
  for (int it = 0; it < max_iter; ++it) {
    map.apply(v, w);
    const double s = norm2(w);
    if (s == 0.0) return 0.0;
    map.apply_adjoint(w, back);
    const double nb = norm2(back);
    if (nb == 0.0) return s;
    for (std::size_t i = 0; i < back.size(); ++i) v[i] = back[i] / nb;
    if (std::abs(s - sigma) <= tol * std::max(1.0, s)) {
      if (++settled >= 4) return s;
    } else {
      settled = 0;
    }
    sigma = s;
  }
  return sigma;
}

SigmaExtremes sigma_extremes_dense(const std::vector<Complex>& column_major, int rows, int cols) {
  if (static_cast<std::size_t>(rows) * cols != column_major.size())
    throw std::invalid_argument("sigma_extremes_dense: size mismatch");
  Eigen::MatrixXcd m(rows, cols);
  for (int c = 0; c < cols; ++c)
    for (int r = 0; r < rows; ++r)
      m(r, c) = column_major[static_cast<std::size_t>(c) * rows + r];
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  SigmaExtremes out;
  out.max = sv.size() ? sv(0) : 0.0;
  out.min = sv.size() ? sv(sv.size() - 1) : 0.0;
  return out;
}

std::vector<Complex> materialize(const LinearMap& map) {
  std::vector<Complex> m(static_cast<std::size_t>(map.rows) * map.cols, Complex(0.0));
  std::vector<Complex> e(static_cast<std::size_t>(map.cols), Complex(0.0));
  std::vector<Complex> y(static_cast<std::size_t>(map.rows));
  for (int c = 0; c < map.cols; ++c) {
    e[static_cast<std::size_t>(c)] = Complex(1.0);
    map.apply(e, y);
    for (int r = 0; r < map.rows; ++r) m[static_cast<std::size_t>(c) * map.rows + r] = y[static_cast<std::size_t>(r)];
    e[static_cast<std::size_t>(c)] = Complex(0.0);
  }
  return m;
}

}  // namespace mabar
