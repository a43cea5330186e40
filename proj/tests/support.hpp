#pragma once

// Shared helpers for the test binaries: seeded random elements and a
// complex-matrix oracle for colored permutations.

#include <Eigen/Dense>

#include <complex>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

#include "gelfand/colored_perm.hpp"
#include "gelfand/cyclotomic.hpp"

namespace testing {

using gelfand::ColoredPermutation;
using Matrix = Eigen::MatrixXcd;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline ColoredPermutation random_element(int r, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng());
  std::vector<int> colors(static_cast<std::size_t>(n));
  for (auto& c : colors) c = uniform(0, r - 1);
  return ColoredPermutation(r, perm, colors);
}

/// Random element of G(r,p,n): the last color absorbs the sum.
inline ColoredPermutation random_member(int r, int p, int n) {
  auto g = random_element(r, n);
  auto colors = g.colors();
  const int excess = gelfand::z_sum(g) % p;
  colors.back() = gelfand::pos_mod(colors.back() - excess, r);
  return ColoredPermutation(r, g.perm(), colors);
}

inline std::complex<double> root(int r, long k) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / r;
  return {std::cos(angle), std::sin(angle)};
}

/// Row i carries zeta_r^(z_i) in column |g|(i).
inline Matrix matrix(const ColoredPermutation& g) {
  const int n = g.size();
  Matrix m = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, g.image(i)) = root(g.modulus(), g.color(i));
  return m;
}

inline bool close(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff() < 1e-9; }

inline std::complex<double> evaluate(const gelfand::Cyclotomic& x) {
  std::complex<double> sum = 0;
  for (std::size_t k = 0; k < x.coeffs().size(); ++k)
    sum += static_cast<double>(x.coeffs()[k]) * root(x.order(), static_cast<long>(k));
  return sum;
}

}  // namespace testing
