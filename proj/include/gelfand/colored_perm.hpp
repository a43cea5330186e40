#pragma once

// Colored permutations: elements of the wreath product G(r,n) and of the
// reflection subgroups G(r,p,n), together with the projective quotients
// G(r,p,q,n) = G(r,p,n) / <zeta_q I>.
//
// Indices are 0-based internally. An element g maps zeta^k i to
// zeta^(k + z_i) |g|(i); as a matrix, row i carries zeta_r^(z_i) in column
// |g|(i). Composition is composition of maps: (g*h)(x) = g(h(x)).

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gelfand {

class InvalidParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SizeBoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultMaxGroupSize = 1'000'000;

int gcd(int a, int b);
inline int pos_mod(std::int64_t a, int m) {
  auto v = static_cast<int>(a % m);
  return v < 0 ? v + m : v;
}

/// Parameters (r, p, q, n) of G(r,p,q,n). Requires p | r, q | r, pq | rn.
struct GroupParams {
  int r = 1;
  int p = 1;
  int q = 1;
  int n = 1;

  /// Throws InvalidParameters when the divisibility conditions fail.
  void validate() const;
  bool valid() const noexcept;
  /// r^n n! / (p q); throws SizeBoundError if it does not fit in 64 bits.
  std::uint64_t order() const;
  /// G(r,q,p,n): p and q swapped.
  GroupParams dual() const { return {r, q, p, n}; }
  std::string to_string() const;

  friend bool operator==(const GroupParams&, const GroupParams&) = default;
};

class ColoredPermutation {
 public:
  ColoredPermutation() = default;
  /// perm[i] = |g|(i); colors[i] = z_i(g), reduced mod r.
  ColoredPermutation(int r, std::vector<int> perm, std::vector<int> colors);

  static ColoredPermutation identity(int r, int n);
  /// Scalar matrix zeta_r^k I.
  static ColoredPermutation scalar(int r, int n, int k);
  static ColoredPermutation plain(int r, std::vector<int> perm);

  int modulus() const { return r_; }
  int size() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<int>& colors() const { return colors_; }
  int image(int i) const { return perm_[static_cast<std::size_t>(i)]; }
  int color(int i) const { return colors_[static_cast<std::size_t>(i)]; }

  bool is_identity() const;
  bool is_scalar() const;

  /// Enumeration order: permutation lexicographic first, then colors.
  friend auto operator<=>(const ColoredPermutation&, const ColoredPermutation&) = default;
  friend bool operator==(const ColoredPermutation&, const ColoredPermutation&) = default;

 private:
  int r_ = 1;
  std::vector<int> perm_;
  std::vector<int> colors_;
};

ColoredPermutation compose(const ColoredPermutation& g, const ColoredPermutation& h);
ColoredPermutation operator*(const ColoredPermutation& g, const ColoredPermutation& h);
ColoredPermutation inverse(const ColoredPermutation& g);
ColoredPermutation bar(const ColoredPermutation& g);
ColoredPermutation transpose(const ColoredPermutation& g);
ColoredPermutation scalar_mul(int k, const ColoredPermutation& g);
/// |g| as an element with all colors zero.
ColoredPermutation underlying(const ColoredPermutation& g);
/// |g| w |g|^-1, conjugation by the plain permutation underlying g.
ColoredPermutation conjugate_by_perm(const ColoredPermutation& g, const ColoredPermutation& w);
/// g * bar(g).
ColoredPermutation absolute_square(const ColoredPermutation& g);

/// Sum of colors in Z_r.
int z_sum(const ColoredPermutation& g);
bool is_member(const ColoredPermutation& g, int p);

enum class SymmetryClass { symmetric, antisymmetric, neither };
SymmetryClass symmetry_class(const ColoredPermutation& g);
std::string to_string(SymmetryClass s);

/// A colored cycle (i_1 ... i_d) with g(i_j) = zeta^(z_j) i_(j+1).
struct ColoredCycle {
  int r = 1;
  std::vector<int> support;
  std::vector<int> colors;

  int length() const { return static_cast<int>(support.size()); }
  int color() const;
  friend bool operator==(const ColoredCycle&, const ColoredCycle&) = default;
};

/// Cycles sorted by minimal support element, each rotated to start there.
std::vector<ColoredCycle> cycle_decomposition(const ColoredPermutation& g);
ColoredPermutation from_cycles(int r, int n, std::span<const ColoredCycle> cycles);
/// c * bar(c): one cycle for odd length, two cycles of half length otherwise.
std::vector<ColoredCycle> cycle_absolute_square(const ColoredCycle& c);

/// Window notation "[(z1,v1),...,(zn,vn)]", 1-based images.
std::string to_window(const ColoredPermutation& g);
ColoredPermutation parse_window(int r, const std::string& text);

struct ProjectiveElement {
  GroupParams params;
  ColoredPermutation lift;  // canonical representative

  friend bool operator==(const ProjectiveElement&, const ProjectiveElement&) = default;
};

/// Lexicographically smallest color vector among the q translates by
/// zeta_r^(k r/q). Does not check membership.
ColoredPermutation canonical_lift(int r, int q, const ColoredPermutation& lift);
/// Throws InvalidParameters if lift is not in G(r,p,n).
ProjectiveElement canonicalize(const GroupParams& params, const ColoredPermutation& lift);
bool proj_equal(const ProjectiveElement& a, const ProjectiveElement& b);

/// Rank of the lift among all of G(r,n) in enumeration order.
std::uint64_t wreath_rank(const ColoredPermutation& g);

}  // namespace gelfand
