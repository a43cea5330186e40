#pragma once

// Ferrers r-tuples (shapes indexing irreducible representations of G(r,n)),
// standard multitableaux, and their quotients by cyclic shifts.

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gelfand/colored_perm.hpp"

namespace gelfand {

using Partition = std::vector<int>;  // weakly decreasing positive parts

/// All partitions of n, in decreasing lexicographic order.
std::vector<Partition> partitions(int n);

/// Single-shape standard tableau count by the hook-length formula.
std::uint64_t hook_length_count(const Partition& lambda);

struct FerrersMulti {
  std::vector<Partition> parts;  // one partition per slot 0..r-1

  int modulus() const { return static_cast<int>(parts.size()); }
  int size() const;
  /// z(mu) = sum_i i |lambda^(i)| in Z_r.
  int color() const;
  bool valid() const;

  friend auto operator<=>(const FerrersMulti&, const FerrersMulti&) = default;
  friend bool operator==(const FerrersMulti&, const FerrersMulti&) = default;
};

using Row = std::vector<int>;
using Diagram = std::vector<Row>;

/// Filling of a FerrersMulti with 1..n (stored as given; RSK uses 1-based).
struct MultiTableau {
  std::vector<Diagram> slots;

  int modulus() const { return static_cast<int>(slots.size()); }
  FerrersMulti shape() const;
  /// Rows and columns increase in every slot and entries are exactly 1..n.
  bool is_standard() const;

  friend auto operator<=>(const MultiTableau&, const MultiTableau&) = default;
  friend bool operator==(const MultiTableau&, const MultiTableau&) = default;
};

/// Result slot j holds input slot (j + steps) mod r.
FerrersMulti shift(const FerrersMulti& mu, int steps);
MultiTableau shift(const MultiTableau& t, int steps);

template <class T>
struct OrbitClass {
  T representative;  // lexicographically minimal member
  int orbit_size = 1;
  int stabilizer = 1;

  friend bool operator==(const OrbitClass&, const OrbitClass&) = default;
};

/// Orbit of a single item under the cyclic group generated by a shift of
/// r/q positions. Requires q | r.
template <class T>
OrbitClass<T> orbit_class(const T& item, int q);

/// Partitions items (assumed closed under the action) into orbits, in order
/// of first appearance.
template <class T>
std::vector<OrbitClass<T>> orbit_quotient(const std::vector<T>& items, int q);

/// Fer(r,n), optionally restricted to z(mu) = 0 mod p.
std::vector<FerrersMulti> enumerate_fer(int r, int n, std::optional<int> color_mod = std::nullopt);

/// |ST_mu| = multinomial(n; |lambda^(i)|) * prod hook_length_count.
std::uint64_t st_count(const FerrersMulti& mu);
std::vector<MultiTableau> enumerate_st(const FerrersMulti& mu, std::uint64_t max_count = 1'000'000);

/// Sum of the dimensions of the irreducible representations of G(r,p,q,n):
/// shape classes mu in Fer(r,q,p,n) under C_p, each contributing
/// |(C_p)_mu| irreducibles of dimension st_count(mu) / |(C_p)_mu|.
std::uint64_t model_dimension(const GroupParams& params);

struct ShapeClassSummary {
  OrbitClass<FerrersMulti> shape;
  std::uint64_t irreducible_dimension;  // st_count / stabilizer
};
/// The shape classes behind model_dimension, in enumeration order.
std::vector<ShapeClassSummary> irreducible_shape_classes(const GroupParams& params);

std::string to_string(const FerrersMulti& mu);

// ---------------------------------------------------------------------------

template <class T>
OrbitClass<T> orbit_class(const T& item, int q) {
  const int r = item.modulus();
  if (q < 1 || r % q != 0) throw InvalidParameters("orbit: q must divide r");
  const int step = r / q;
  OrbitClass<T> out{item, 0, 0};
  T cur = item;
  for (int k = 0; k < q; ++k) {
    if (cur < out.representative) out.representative = cur;
    if (cur == item) ++out.stabilizer;
    cur = shift(cur, step);
  }
  out.orbit_size = q / out.stabilizer;
  return out;
}

template <class T>
std::vector<OrbitClass<T>> orbit_quotient(const std::vector<T>& items, int q) {
  std::vector<OrbitClass<T>> out;
  std::set<T> seen;
  for (const auto& item : items) {
    auto cls = orbit_class(item, q);
    if (seen.insert(cls.representative).second) out.push_back(std::move(cls));
  }
  return out;
}

}  // namespace gelfand
