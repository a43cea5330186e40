#include "gelfand/tableaux.hpp"

#include "gelfand/cyclotomic.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

namespace gelfand {

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t narrow(u128 v, const char* what) {
  if (v > std::numeric_limits<std::uint64_t>::max()) throw SizeBoundError(std::string(what) + ": count overflows 64 bits");
  return static_cast<std::uint64_t>(v);
}

void partitions_rec(int remaining, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

int partition_size(const Partition& p) {
  int s = 0;
  for (int x : p) s += x;
  return s;
}

}  // namespace

std::vector<Partition> partitions(int n) {
  if (n < 0) throw InvalidParameters("partitions: n must be nonnegative");
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::uint64_t hook_length_count(const Partition& lambda) {
  const int n = partition_size(lambda);
  if (n > 30) throw SizeBoundError("hook_length_count: shape too large");
  // Conjugate row lengths give column heights.
  std::vector<int> col_height(lambda.empty() ? 0 : static_cast<std::size_t>(lambda.front()), 0);
  for (int len : lambda)
    for (int j = 0; j < len; ++j) ++col_height[static_cast<std::size_t>(j)];
  u128 num = 1;
  for (int k = 2; k <= n; ++k) num *= static_cast<unsigned>(k);
  u128 den = 1;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (int j = 0; j < lambda[i]; ++j) {
      const int arm = lambda[i] - j - 1;
      const int leg = col_height[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
      den *= static_cast<unsigned>(arm + leg + 1);
    }
  return narrow(num / den, "hook_length_count");
}

int FerrersMulti::size() const {
  int s = 0;
  for (const auto& p : parts) s += partition_size(p);
  return s;
}

int FerrersMulti::color() const {
  std::int64_t z = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) z += static_cast<std::int64_t>(i) * partition_size(parts[i]);
  return pos_mod(z, modulus());
}

bool FerrersMulti::valid() const {
  for (const auto& p : parts)
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] <= 0 || (i > 0 && p[i] > p[i - 1])) return false;
  return !parts.empty();
}

FerrersMulti MultiTableau::shape() const {
  FerrersMulti mu;
  for (const auto& d : slots) {
    Partition p;
    for (const auto& row : d) p.push_back(static_cast<int>(row.size()));
    mu.parts.push_back(std::move(p));
  }
  return mu;
}

bool MultiTableau::is_standard() const {
  std::vector<int> entries;
  for (const auto& d : slots) {
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i].empty()) return false;
      if (i > 0 && d[i].size() > d[i - 1].size()) return false;
      for (std::size_t j = 0; j < d[i].size(); ++j) {
        if (j > 0 && d[i][j] <= d[i][j - 1]) return false;
        if (i > 0 && d[i][j] <= d[i - 1][j]) return false;
        entries.push_back(d[i][j]);
      }
    }
  }
  std::sort(entries.begin(), entries.end());
  for (std::size_t k = 0; k < entries.size(); ++k)
    if (entries[k] != static_cast<int>(k) + 1) return false;
  return true;
}

template <class Slots>
static Slots rotate_slots(const Slots& in, int steps) {
  const int r = static_cast<int>(in.size());
  Slots out(in.size());
  for (int j = 0; j < r; ++j) out[static_cast<std::size_t>(j)] = in[static_cast<std::size_t>(pos_mod(j + steps, r))];
  return out;
}

FerrersMulti shift(const FerrersMulti& mu, int steps) { return {rotate_slots(mu.parts, steps)}; }
MultiTableau shift(const MultiTableau& t, int steps) { return {rotate_slots(t.slots, steps)}; }

std::vector<FerrersMulti> enumerate_fer(int r, int n, std::optional<int> color_mod) {
  if (r < 1 || n < 0) throw InvalidParameters("enumerate_fer: need r >= 1 and n >= 0");
  if (color_mod && (*color_mod < 1 || r % *color_mod != 0))
    throw InvalidParameters("enumerate_fer: color modulus must divide r");
  std::vector<std::vector<Partition>> by_size(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) by_size[static_cast<std::size_t>(k)] = partitions(k);

  std::vector<FerrersMulti> out;
  std::vector<int> sizes(static_cast<std::size_t>(r), 0);
  FerrersMulti cur{std::vector<Partition>(static_cast<std::size_t>(r))};
  std::function<void(int)> fill = [&](int slot) {
    if (slot == r) {
      if (!color_mod || cur.color() % *color_mod == 0) out.push_back(cur);
      return;
    }
    for (const auto& p : by_size[static_cast<std::size_t>(sizes[static_cast<std::size_t>(slot)])]) {
      cur.parts[static_cast<std::size_t>(slot)] = p;
      fill(slot + 1);
    }
  };
  // Slot sizes: compositions of n into r parts, first slot largest first.
  std::function<void(int, int)> compose_sizes = [&](int slot, int remaining) {
    if (slot == r - 1) {
      sizes[static_cast<std::size_t>(slot)] = remaining;
      fill(0);
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      sizes[static_cast<std::size_t>(slot)] = k;
      compose_sizes(slot + 1, remaining - k);
    }
  };
  compose_sizes(0, n);
  return out;
}

std::uint64_t st_count(const FerrersMulti& mu) {
  const int n = mu.size();
  if (n > 30) throw SizeBoundError("st_count: shape too large");
  // multinomial(n; sizes) built incrementally as a product of binomials
  u128 total = 1;
  int placed = 0;
  for (const auto& p : mu.parts) {
    const int k = partition_size(p);
    u128 binom = 1;
    for (int i = 1; i <= k; ++i) binom = binom * static_cast<unsigned>(placed + i) / static_cast<unsigned>(i);
    placed += k;
    total *= binom;
    total *= hook_length_count(p);
    narrow(total, "st_count");
  }
  return narrow(total, "st_count");
}

std::vector<MultiTableau> enumerate_st(const FerrersMulti& mu, std::uint64_t max_count) {
  if (st_count(mu) > max_count) throw SizeBoundError("enumerate_st: too many tableaux");
  const int n = mu.size();
  MultiTableau cur;
  cur.slots.resize(mu.parts.size());
  for (std::size_t s = 0; s < mu.parts.size(); ++s) cur.slots[s].resize(mu.parts[s].size());
  std::vector<MultiTableau> out;
  std::function<void(int)> place = [&](int value) {
    if (value > n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t s = 0; s < mu.parts.size(); ++s) {
      auto& d = cur.slots[s];
      for (std::size_t i = 0; i < d.size(); ++i) {
        const auto len = d[i].size();
        if (static_cast<int>(len) >= mu.parts[s][i]) continue;
        if (i > 0 && d[i - 1].size() <= len) continue;
        d[i].push_back(value);
        place(value + 1);
        d[i].pop_back();
      }
    }
  };
  place(1);
  return out;
}

std::vector<ShapeClassSummary> irreducible_shape_classes(const GroupParams& params) {
  params.validate();
  std::vector<ShapeClassSummary> out;
  for (auto& cls : orbit_quotient(enumerate_fer(params.r, params.n, params.q), params.p)) {
    const auto st = st_count(cls.representative);
    if (st % static_cast<std::uint64_t>(cls.stabilizer) != 0)
      throw ArithmeticError("stabilizer order does not divide the tableau count of " + to_string(cls.representative));
    const auto dim = st / static_cast<std::uint64_t>(cls.stabilizer);
    out.push_back({std::move(cls), dim});
  }
  return out;
}

std::uint64_t model_dimension(const GroupParams& params) {
  std::uint64_t total = 0;
  for (const auto& c : irreducible_shape_classes(params))
    total += static_cast<std::uint64_t>(c.shape.stabilizer) * c.irreducible_dimension;
  return total;
}

std::string to_string(const FerrersMulti& mu) {
  std::ostringstream os;
  os << "(";
  for (std::size_t s = 0; s < mu.parts.size(); ++s) {
    if (s) os << ",";
    os << "[";
    for (std::size_t i = 0; i < mu.parts[s].size(); ++i) os << (i ? " " : "") << mu.parts[s][i];
    os << "]";
  }
  os << ")";
  return os.str();
}

}  // namespace gelfand
