#pragma once

// Partitions of the cycle set of an element into singletons and pairs of
// cycles of equal length.

#include <cstdint>
#include <string>
#include <vector>

#include "gelfand/colored_perm.hpp"

namespace gelfand {

struct CyclePart {
  int first = 0;    // index into the cycle list
  int second = -1;  // partner cycle, or -1 for a singleton

  bool is_pair() const { return second >= 0; }
  friend auto operator<=>(const CyclePart&, const CyclePart&) = default;
};

struct CyclePartition {
  std::vector<CyclePart> parts;  // ordered by first

  /// Number of parts.
  int ell() const { return static_cast<int>(parts.size()); }
  friend bool operator==(const CyclePartition&, const CyclePartition&) = default;
};

/// Every partition of the cycles into singletons and equal-length pairs.
std::vector<CyclePartition> pi21(const std::vector<ColoredCycle>& cycles, std::size_t max_count = 1'000'000);
std::vector<CyclePartition> pi21(const ColoredPermutation& g);

/// Size of the support of a part.
int part_support(const std::vector<ColoredCycle>& cycles, const CyclePart& s);
/// z(s): color sum of the cycles in the part.
int part_color(const std::vector<ColoredCycle>& cycles, const CyclePart& s);
bool has_even_singleton(const std::vector<ColoredCycle>& cycles, const CyclePartition& pi);
/// prod_j j^(pair_j(pi)).
std::uint64_t pair_weight(const std::vector<ColoredCycle>& cycles, const CyclePartition& pi);

/// Part structure of the involution w relative to the cycles of |g|, or an
/// empty optional-like result (parts empty) if |w| does not permute the
/// cycle supports as singletons and pairs.
CyclePartition partition_of(const std::vector<ColoredCycle>& cycles, const ColoredPermutation& w);

/// "{{c1,c5},{c2,c4},{c3}}" with 1-based cycle numbers.
std::string to_string(const CyclePartition& pi);

}  // namespace gelfand
