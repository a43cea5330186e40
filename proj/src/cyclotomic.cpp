#include "gelfand/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace gelfand {

namespace detail {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw ArithmeticError("cyclotomic coefficient overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw ArithmeticError("cyclotomic coefficient overflow");
  return out;
}

}  // namespace detail

namespace {

using detail::checked_add;
using detail::checked_mul;

int pos_mod(std::int64_t a, int m) {
  auto v = static_cast<int>(a % m);
  return v < 0 ? v + m : v;
}

// Quotient of num by a monic divisor; throws if the remainder is nonzero.
Poly exact_poly_div(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() <= dn) throw ArithmeticError("polynomial division: degree too small");
  Poly quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const std::int64_t c = num[k];
    quot[k - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
  }
  for (std::size_t k = 0; k < dn; ++k)
    if (num[k] != 0) throw ArithmeticError("polynomial division: nonzero remainder");
  return quot;
}

// Reduces a polynomial of arbitrary degree modulo the monic Phi_r in place
// and returns the first phi(r) coefficients.
std::vector<std::int64_t> reduce(Poly a, int r) {
  const Poly& phi_r = cyclotomic_polynomial(r);
  const std::size_t deg = phi_r.size() - 1;
  for (std::size_t k = a.size(); k-- > deg;) {
    const std::int64_t c = a[k];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j)
      a[k - deg + j] = checked_add(a[k - deg + j], -checked_mul(c, phi_r[j]));
  }
  a.resize(deg, 0);
  return a;
}

}  // namespace

int euler_phi(int r) {
  if (r < 1) throw std::invalid_argument("euler_phi: r must be positive");
  int result = r;
  int m = r;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

const Poly& cyclotomic_polynomial(int r) {
  if (r < 1) throw std::invalid_argument("cyclotomic_polynomial: r must be positive");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<Poly>> cache;
  {
    std::scoped_lock lock(mutex);
    if (auto it = cache.find(r); it != cache.end()) return *it->second;
  }
  Poly num(static_cast<std::size_t>(r) + 1, 0);
  num[0] = -1;
  num[r] = 1;
  for (int d = 1; d < r; ++d)
    if (r % d == 0) num = exact_poly_div(std::move(num), cyclotomic_polynomial(d));
  std::scoped_lock lock(mutex);
  auto [it, inserted] = cache.emplace(r, std::make_unique<Poly>(std::move(num)));
  return *it->second;
}

Cyclotomic::Cyclotomic(int order) : order_(order) {
  if (order < 1) throw std::invalid_argument("Cyclotomic: order must be positive");
  coeffs_.assign(static_cast<std::size_t>(euler_phi(order)), 0);
}

Cyclotomic Cyclotomic::from_int(int order, std::int64_t value) {
  Cyclotomic c(order);
  c.coeffs_[0] = value;
  return c;
}

Cyclotomic Cyclotomic::root_power(int order, std::int64_t k) {
  std::vector<std::int64_t> raw(static_cast<std::size_t>(order), 0);
  raw[pos_mod(k, order)] = 1;
  return from_exponent_vector(order, raw);
}

Cyclotomic Cyclotomic::from_exponent_vector(int order, std::span<const std::int64_t> raw) {
  if (static_cast<int>(raw.size()) != order)
    throw std::invalid_argument("from_exponent_vector: raw length must equal the order");
  Cyclotomic c(order);
  c.coeffs_ = reduce(Poly(raw.begin(), raw.end()), order);
  return c;
}

bool Cyclotomic::is_zero() const {
  for (auto c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_integer() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return false;
  return true;
}

std::int64_t Cyclotomic::to_integer() const {
  if (!is_integer()) throw ArithmeticError("cyclotomic value is not a rational integer");
  return coeffs_[0];
}

Cyclotomic Cyclotomic::conj() const {
  std::vector<std::int64_t> raw(static_cast<std::size_t>(order_), 0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    auto& slot = raw[pos_mod(-static_cast<std::int64_t>(k), order_)];
    slot = checked_add(slot, coeffs_[k]);
  }
  return from_exponent_vector(order_, raw);
}

Cyclotomic Cyclotomic::exact_div(std::int64_t m) const {
  if (m < 1) throw std::invalid_argument("exact_div: divisor must be positive");
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) {
    if (c % m != 0) throw ArithmeticError("exact_div: coefficient not divisible by " + std::to_string(m));
    c /= m;
  }
  return out;
}

void Cyclotomic::check_compatible(const Cyclotomic& other) const {
  if (order_ != other.order_)
    throw std::invalid_argument("cyclotomic order mismatch: " + std::to_string(order_) + " vs " +
                                std::to_string(other.order_));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  check_compatible(other);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] = checked_add(coeffs_[k], other.coeffs_[k]);
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) {
  check_compatible(other);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] = checked_add(coeffs_[k], -other.coeffs_[k]);
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
  check_compatible(other);
  Poly prod(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
      prod[i + j] = checked_add(prod[i + j], checked_mul(coeffs_[i], other.coeffs_[j]));
  }
  coeffs_ = reduce(std::move(prod), order_);
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const auto c = coeffs_[k];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    const auto mag = c < 0 ? -c : c;
    if (k == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << "z" << order_;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

UnitScalar::UnitScalar(int order, int exponent, int sign) : order_(order), exponent_(0), sign_(1) {
  if (order < 1) throw std::invalid_argument("UnitScalar: order must be positive");
  if (sign != 1 && sign != -1) throw std::invalid_argument("UnitScalar: sign must be +1 or -1");
  exponent_ = pos_mod(exponent, order);
  sign_ = sign;
  if (order_ % 2 == 0 && sign_ == -1) {
    exponent_ = (exponent_ + order_ / 2) % order_;
    sign_ = 1;
  }
}

UnitScalar UnitScalar::operator*(const UnitScalar& other) const {
  if (order_ != other.order_) throw std::invalid_argument("UnitScalar: order mismatch");
  return UnitScalar(order_, exponent_ + other.exponent_, sign_ * other.sign_);
}

UnitScalar UnitScalar::inverse() const { return UnitScalar(order_, -exponent_, sign_); }

void UnitScalar::accumulate(std::span<std::int64_t> histogram) const {
  histogram[static_cast<std::size_t>(exponent_)] += sign_;
}

Cyclotomic UnitScalar::embed() const {
  std::vector<std::int64_t> raw(static_cast<std::size_t>(order_), 0);
  accumulate(raw);
  return Cyclotomic::from_exponent_vector(order_, raw);
}

}  // namespace gelfand
