#pragma once

// Exact arithmetic in the ring of cyclotomic integers Z[zeta_r].
//
// Values are stored in the power basis 1, x, ..., x^(phi(r)-1) of
// Z[x] / Phi_r(x). Reduction modulo the (monic) cyclotomic polynomial
// makes the representation canonical, so equality is a plain vector
// comparison. Coefficients are 64-bit with overflow detection.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gelfand {

using Poly = std::vector<std::int64_t>;  // coefficient of x^k at index k

class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int euler_phi(int r);

/// The r-th cyclotomic polynomial, obtained by exact division of x^r - 1
/// by Phi_d for every proper divisor d of r. Results are memoized.
const Poly& cyclotomic_polynomial(int r);

class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(1) {}
  explicit Cyclotomic(int order);

  static Cyclotomic from_int(int order, std::int64_t value);
  /// zeta_r^k for any integer k.
  static Cyclotomic root_power(int order, std::int64_t k);
  /// Canonical reduction of sum raw[k] x^k. raw.size() must equal order.
  static Cyclotomic from_exponent_vector(int order, std::span<const std::int64_t> raw);

  int order() const { return order_; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  /// The value as a rational integer, if it is one.
  bool is_integer() const;
  std::int64_t to_integer() const;

  Cyclotomic conj() const;
  Cyclotomic exact_div(std::int64_t m) const;

  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);
  Cyclotomic operator-() const;

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend bool operator==(const Cyclotomic&, const Cyclotomic&) = default;

  std::string to_string() const;

 private:
  void check_compatible(const Cyclotomic& other) const;

  int order_;
  std::vector<std::int64_t> coeffs_;
};

/// sign * zeta_r^exponent. For even r the sign is folded into the exponent
/// (-1 = zeta_r^(r/2)), so equal scalars have equal fields.
class UnitScalar {
 public:
  explicit UnitScalar(int order, int exponent = 0, int sign = 1);

  int order() const { return order_; }
  int exponent() const { return exponent_; }
  int sign() const { return sign_; }

  UnitScalar operator*(const UnitScalar& other) const;
  UnitScalar inverse() const;
  friend bool operator==(const UnitScalar&, const UnitScalar&) = default;

  /// Adds this scalar to an exponent histogram of length order().
  void accumulate(std::span<std::int64_t> histogram) const;
  Cyclotomic embed() const;

 private:
  int order_;
  int exponent_;
  int sign_;
};

namespace detail {
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
}  // namespace detail

}  // namespace gelfand
