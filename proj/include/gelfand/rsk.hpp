#pragma once

// Robinson-Schensted correspondence for G(r,n) and its projective quotients.
//
// Each color class of g is handled separately: the positions i with
// z_i(g) = k, read in increasing order, form a partial permutation
// i -> |g|(i) that is row-inserted by classical RSK. The resulting pair of
// diagrams goes to slot (-k mod r). With this slot convention
//   zeta_r g  |-> both tuples rotated one slot to the left, and
//   bar(g)^-1 |-> P and Q exchanged.

#include <string>
#include <vector>

#include "gelfand/colored_perm.hpp"
#include "gelfand/group.hpp"
#include "gelfand/tableaux.hpp"

namespace gelfand {

/// Slot receiving the color class k.
inline int rsk_slot_of_color(int k, int r) { return pos_mod(-k, r); }

struct TableauPair {
  MultiTableau P;  // insertion tableaux (values |g|(i), 1-based)
  MultiTableau Q;  // recording tableaux (positions i, 1-based)

  friend bool operator==(const TableauPair&, const TableauPair&) = default;
};

TableauPair rs_wreath(const ColoredPermutation& g);
/// Inverse map; P and Q must be standard of the same shape.
ColoredPermutation rs_wreath_inverse(const TableauPair& pq);

struct ProjectiveTableauPair {
  OrbitClass<MultiTableau> P;
  OrbitClass<MultiTableau> Q;
  OrbitClass<FerrersMulti> shape_P;
  OrbitClass<FerrersMulti> shape_Q;

  friend bool operator==(const ProjectiveTableauPair&, const ProjectiveTableauPair&) = default;
};

/// rs_wreath on the canonical lift, with both tableaux projected to their
/// C_q orbit classes.
ProjectiveTableauPair rs_projective(const ProjectiveElement& v);

struct PropertyResult {
  std::string name;
  bool passed = true;
  std::uint64_t checked = 0;
  std::string witness;  // window notation of a violating element
  std::string detail;
};

struct RsReport {
  GroupParams params;
  std::vector<PropertyResult> properties;
  bool passed() const;
};

/// Exhaustive check of shape equality, fiber sizes, the shift and
/// bar-inverse laws, and (r even) the half-shift characterization of
/// v bar(v) = -1, over all of G(r,p,q,n).
RsReport rs_properties_check(const GroupParams& params, std::uint64_t max_size = kDefaultMaxGroupSize);

}  // namespace gelfand
