#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "gelfand/colored_perm.hpp"

namespace gelfand {

struct ConjugacyClass {
  std::uint32_t representative;  // index into ProjectiveGroup::elements()
  std::uint64_t size;
};

/// A fully enumerated G(r,p,q,n), stored as canonical lifts.
///
/// Element order is fixed: permutations lexicographic, then colors as a
/// mixed-radix counter with the last position fastest; classes appear in
/// that order after filtering by membership and keeping canonical lifts.
class ProjectiveGroup {
 public:
  explicit ProjectiveGroup(GroupParams params, std::uint64_t max_size = kDefaultMaxGroupSize);

  const GroupParams& params() const { return params_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<ColoredPermutation>& elements() const { return elements_; }
  const ColoredPermutation& operator[](std::size_t i) const { return elements_[i]; }

  /// Index of the class containing this lift (any lift in G(r,p,n)).
  std::optional<std::uint32_t> find(const ColoredPermutation& lift) const;
  std::uint32_t index_of(const ColoredPermutation& lift) const;

  /// Generators of G(r,p,n) projected to the quotient.
  std::vector<ColoredPermutation> generators() const;

  /// Orbits of conjugation; computed on first use.
  const std::vector<ConjugacyClass>& conjugacy_classes() const;
  /// Class index of every element.
  const std::vector<std::uint32_t>& class_index() const;

  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const;

 private:
  void compute_classes() const;

  GroupParams params_;
  std::vector<ColoredPermutation> elements_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  mutable std::vector<ConjugacyClass> classes_;
  mutable std::vector<std::uint32_t> class_of_;
};

/// Calls visit(lift) for each class of G(r,p,q,n) in enumeration order.
template <class Visitor>
void for_each_element(const GroupParams& params, Visitor&& visit);

/// Throws SizeBoundError when |G(r,p,q,n)| exceeds the bound.
void check_size(const GroupParams& params, std::uint64_t max_size);

/// lift * bar(lift) lies in the scalar subgroup C_q.
bool is_absolute_involution(const ColoredPermutation& lift, int q);

/// Absolute involutions of G(r,p,q,n) by brute force over the group.
std::vector<ProjectiveElement> absolute_involutions(const GroupParams& params,
                                                    std::uint64_t max_size = kDefaultMaxGroupSize);
/// Same set, built as symmetric classes plus (q even) antisymmetric ones.
std::vector<ProjectiveElement> absolute_involutions_by_symmetry(const GroupParams& params,
                                                                std::uint64_t max_size = kDefaultMaxGroupSize);
std::uint64_t count_absolute_involutions(const GroupParams& params, std::uint64_t max_size = kDefaultMaxGroupSize);

// ---------------------------------------------------------------------------

template <class Visitor>
void for_each_element(const GroupParams& params, Visitor&& visit) {
  params.validate();
  const int r = params.r, n = params.n;
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::vector<int> colors(static_cast<std::size_t>(n), 0);
  const int step = r / params.q;
  std::vector<int> shifted(colors.size());
  do {
    std::fill(colors.begin(), colors.end(), 0);
    int sum = 0;
    while (true) {
      if (sum % params.p == 0) {
        bool canonical = true;
        for (int k = 1; k < params.q && canonical; ++k) {
          for (std::size_t i = 0; i < colors.size(); ++i) shifted[i] = (colors[i] + k * step) % r;
          if (shifted < colors) canonical = false;
        }
        if (canonical) visit(ColoredPermutation(r, perm, colors));
      }
      int pos = n - 1;
      while (pos >= 0 && colors[static_cast<std::size_t>(pos)] == r - 1) {
        colors[static_cast<std::size_t>(pos)] = 0;
        sum -= r - 1;
        --pos;
      }
      if (pos < 0) break;
      ++colors[static_cast<std::size_t>(pos)];
      ++sum;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace gelfand
