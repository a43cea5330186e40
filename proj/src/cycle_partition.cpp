#include "gelfand/cycle_partition.hpp"

#include <functional>

namespace gelfand {

std::vector<CyclePartition> pi21(const std::vector<ColoredCycle>& cycles, std::size_t max_count) {
  const int m = static_cast<int>(cycles.size());
  std::vector<bool> used(static_cast<std::size_t>(m), false);
  std::vector<CyclePartition> out;
  CyclePartition cur;
  std::function<void(int)> rec = [&](int start) {
    while (start < m && used[static_cast<std::size_t>(start)]) ++start;
    if (start == m) {
      if (out.size() >= max_count) throw SizeBoundError("pi21: too many cycle partitions");
      out.push_back(cur);
      return;
    }
    used[static_cast<std::size_t>(start)] = true;
    cur.parts.push_back({start, -1});
    rec(start + 1);
    cur.parts.pop_back();
    for (int j = start + 1; j < m; ++j) {
      if (used[static_cast<std::size_t>(j)] || cycles[static_cast<std::size_t>(j)].length() != cycles[static_cast<std::size_t>(start)].length())
        continue;
      used[static_cast<std::size_t>(j)] = true;
      cur.parts.push_back({start, j});
      rec(start + 1);
      cur.parts.pop_back();
      used[static_cast<std::size_t>(j)] = false;
    }
    used[static_cast<std::size_t>(start)] = false;
  };
  rec(0);
  return out;
}

std::vector<CyclePartition> pi21(const ColoredPermutation& g) { return pi21(cycle_decomposition(g)); }

int part_support(const std::vector<ColoredCycle>& cycles, const CyclePart& s) {
  const int d = cycles[static_cast<std::size_t>(s.first)].length();
  return s.is_pair() ? 2 * d : d;
}

int part_color(const std::vector<ColoredCycle>& cycles, const CyclePart& s) {
  const auto& c = cycles[static_cast<std::size_t>(s.first)];
  int z = c.color();
  if (s.is_pair()) z += cycles[static_cast<std::size_t>(s.second)].color();
  return pos_mod(z, c.r);
}

bool has_even_singleton(const std::vector<ColoredCycle>& cycles, const CyclePartition& pi) {
  for (const auto& s : pi.parts)
    if (!s.is_pair() && cycles[static_cast<std::size_t>(s.first)].length() % 2 == 0) return true;
  return false;
}

std::uint64_t pair_weight(const std::vector<ColoredCycle>& cycles, const CyclePartition& pi) {
  std::uint64_t w = 1;
  for (const auto& s : pi.parts)
    if (s.is_pair()) w *= static_cast<std::uint64_t>(cycles[static_cast<std::size_t>(s.first)].length());
  return w;
}

CyclePartition partition_of(const std::vector<ColoredCycle>& cycles, const ColoredPermutation& w) {
  std::vector<int> cycle_of(static_cast<std::size_t>(w.size()), -1);
  for (std::size_t c = 0; c < cycles.size(); ++c)
    for (int i : cycles[c].support) cycle_of[static_cast<std::size_t>(i)] = static_cast<int>(c);
  CyclePartition pi;
  std::vector<bool> seen(cycles.size(), false);
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    if (seen[c]) continue;
    // Every element of the support must land in one common cycle.
    const int target = cycle_of[static_cast<std::size_t>(w.image(cycles[c].support.front()))];
    for (int i : cycles[c].support)
      if (cycle_of[static_cast<std::size_t>(w.image(i))] != target) return {};
    seen[c] = true;
    if (target == static_cast<int>(c)) {
      pi.parts.push_back({target, -1});
    } else {
      if (seen[static_cast<std::size_t>(target)]) return {};
      for (int j : cycles[static_cast<std::size_t>(target)].support)
        if (cycle_of[static_cast<std::size_t>(w.image(j))] != static_cast<int>(c)) return {};
      seen[static_cast<std::size_t>(target)] = true;
      pi.parts.push_back({static_cast<int>(c), target});
    }
  }
  return pi;
}

std::string to_string(const CyclePartition& pi) {
  std::string out = "{";
  for (std::size_t k = 0; k < pi.parts.size(); ++k) {
    if (k) out += ",";
    out += "{c" + std::to_string(pi.parts[k].first + 1);
    if (pi.parts[k].is_pair()) out += ",c" + std::to_string(pi.parts[k].second + 1);
    out += "}";
  }
  return out + "}";
}

}  // namespace gelfand
