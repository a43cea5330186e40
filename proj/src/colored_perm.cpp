#include "gelfand/colored_perm.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>

namespace gelfand {

int gcd(int a, int b) { return std::gcd(a, b); }

void GroupParams::validate() const {
  if (r < 1 || p < 1 || q < 1 || n < 1)
    throw InvalidParameters("G" + to_string() + ": all parameters must be positive");
  if (r % p != 0) throw InvalidParameters("G" + to_string() + ": p must divide r");
  if (r % q != 0) throw InvalidParameters("G" + to_string() + ": q must divide r");
  if ((static_cast<std::int64_t>(r) * n) % (static_cast<std::int64_t>(p) * q) != 0)
    throw InvalidParameters("G" + to_string() + ": pq must divide rn");
}

bool GroupParams::valid() const noexcept {
  return r >= 1 && p >= 1 && q >= 1 && n >= 1 && r % p == 0 && r % q == 0 &&
         (static_cast<std::int64_t>(r) * n) % (static_cast<std::int64_t>(p) * q) == 0;
}

std::uint64_t GroupParams::order() const {
  validate();
  __extension__ typedef unsigned __int128 u128;
  u128 total = 1;
  const u128 limit = std::numeric_limits<std::uint64_t>::max();
  for (int i = 0; i < n; ++i) {
    total *= static_cast<unsigned>(r);
    total *= static_cast<unsigned>(i + 1);
    if (total / (static_cast<unsigned>(p) * static_cast<unsigned>(q)) > limit)
      throw SizeBoundError("G" + to_string() + ": order does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(total / (static_cast<unsigned>(p) * static_cast<unsigned>(q)));
}

std::string GroupParams::to_string() const {
  std::ostringstream os;
  os << "(" << r << "," << p << "," << q << "," << n << ")";
  return os.str();
}

ColoredPermutation::ColoredPermutation(int r, std::vector<int> perm, std::vector<int> colors)
    : r_(r), perm_(std::move(perm)), colors_(std::move(colors)) {
  if (r_ < 1) throw InvalidParameters("colored permutation: modulus must be positive");
  if (perm_.size() != colors_.size())
    throw InvalidParameters("colored permutation: permutation and color vector differ in length");
  std::vector<char> seen(perm_.size(), 0);
  for (int v : perm_) {
    if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)])
      throw InvalidParameters("colored permutation: not a bijection");
    seen[static_cast<std::size_t>(v)] = 1;
  }
  for (auto& z : colors_) z = pos_mod(z, r_);
}

ColoredPermutation ColoredPermutation::identity(int r, int n) { return scalar(r, n, 0); }

ColoredPermutation ColoredPermutation::scalar(int r, int n, int k) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  return {r, std::move(perm), std::vector<int>(static_cast<std::size_t>(n), pos_mod(k, r))};
}

ColoredPermutation ColoredPermutation::plain(int r, std::vector<int> perm) {
  std::vector<int> colors(perm.size(), 0);
  return {r, std::move(perm), std::move(colors)};
}

bool ColoredPermutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (image(i) != i || color(i) != 0) return false;
  return true;
}

bool ColoredPermutation::is_scalar() const {
  for (int i = 0; i < size(); ++i)
    if (image(i) != i || color(i) != colors_.front()) return false;
  return true;
}

namespace {

void require_compatible(const ColoredPermutation& g, const ColoredPermutation& h) {
  if (g.modulus() != h.modulus() || g.size() != h.size())
    throw InvalidParameters("colored permutations have different modulus or size");
}

}  // namespace

ColoredPermutation compose(const ColoredPermutation& g, const ColoredPermutation& h) {
  require_compatible(g, h);
  const auto n = static_cast<std::size_t>(g.size());
  std::vector<int> perm(n), colors(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int hi = h.perm()[i];
    perm[i] = g.image(hi);
    colors[i] = h.colors()[i] + g.color(hi);
  }
  return {g.modulus(), std::move(perm), std::move(colors)};
}

ColoredPermutation operator*(const ColoredPermutation& g, const ColoredPermutation& h) { return compose(g, h); }

ColoredPermutation inverse(const ColoredPermutation& g) {
  const auto n = static_cast<std::size_t>(g.size());
  std::vector<int> perm(n), colors(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto j = static_cast<std::size_t>(g.perm()[i]);
    perm[j] = static_cast<int>(i);
    colors[j] = -g.colors()[i];
  }
  return {g.modulus(), std::move(perm), std::move(colors)};
}

ColoredPermutation bar(const ColoredPermutation& g) {
  std::vector<int> colors(g.colors());
  for (auto& z : colors) z = -z;
  return {g.modulus(), g.perm(), std::move(colors)};
}

ColoredPermutation transpose(const ColoredPermutation& g) {
  const auto n = static_cast<std::size_t>(g.size());
  std::vector<int> perm(n), colors(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto j = static_cast<std::size_t>(g.perm()[i]);
    perm[j] = static_cast<int>(i);
    colors[j] = g.colors()[i];
  }
  return {g.modulus(), std::move(perm), std::move(colors)};
}

ColoredPermutation scalar_mul(int k, const ColoredPermutation& g) {
  std::vector<int> colors(g.colors());
  for (auto& z : colors) z += k;
  return {g.modulus(), g.perm(), std::move(colors)};
}

ColoredPermutation underlying(const ColoredPermutation& g) { return ColoredPermutation::plain(g.modulus(), g.perm()); }

ColoredPermutation conjugate_by_perm(const ColoredPermutation& g, const ColoredPermutation& w) {
  require_compatible(g, w);
  const auto n = static_cast<std::size_t>(g.size());
  std::vector<int> perm(n), colors(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto sj = static_cast<std::size_t>(g.perm()[j]);
    perm[sj] = g.image(w.perm()[j]);
    colors[sj] = w.colors()[j];
  }
  return {g.modulus(), std::move(perm), std::move(colors)};
}

ColoredPermutation absolute_square(const ColoredPermutation& g) { return compose(g, bar(g)); }

int z_sum(const ColoredPermutation& g) {
  std::int64_t s = 0;
  for (int z : g.colors()) s += z;
  return pos_mod(s, g.modulus());
}

bool is_member(const ColoredPermutation& g, int p) {
  if (p < 1 || g.modulus() % p != 0) throw InvalidParameters("is_member: p must divide r");
  return z_sum(g) % p == 0;
}

SymmetryClass symmetry_class(const ColoredPermutation& g) {
  const int r = g.modulus();
  bool symmetric = true;
  bool antisymmetric = r % 2 == 0;
  for (int i = 0; i < g.size(); ++i) {
    const int j = g.image(i);
    if (g.image(j) != i) return SymmetryClass::neither;
    // Transposed entry at row j is zeta^(z_i) in column i.
    const int diff = pos_mod(g.color(i) - g.color(j), r);
    if (diff != 0) symmetric = false;
    if (diff != r / 2 || r % 2 != 0) antisymmetric = false;
  }
  if (symmetric) return SymmetryClass::symmetric;
  if (antisymmetric) return SymmetryClass::antisymmetric;
  return SymmetryClass::neither;
}

std::string to_string(SymmetryClass s) {
  switch (s) {
    case SymmetryClass::symmetric: return "symmetric";
    case SymmetryClass::antisymmetric: return "antisymmetric";
    case SymmetryClass::neither: return "neither";
  }
  return "neither";
}

int ColoredCycle::color() const {
  std::int64_t s = 0;
  for (int z : colors) s += z;
  return pos_mod(s, r);
}

std::vector<ColoredCycle> cycle_decomposition(const ColoredPermutation& g) {
  std::vector<ColoredCycle> cycles;
  std::vector<char> seen(static_cast<std::size_t>(g.size()), 0);
  for (int start = 0; start < g.size(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ColoredCycle c{g.modulus(), {}, {}};
    for (int i = start; !seen[static_cast<std::size_t>(i)]; i = g.image(i)) {
      seen[static_cast<std::size_t>(i)] = 1;
      c.support.push_back(i);
      c.colors.push_back(g.color(i));
    }
    cycles.push_back(std::move(c));
  }
  return cycles;
}

ColoredPermutation from_cycles(int r, int n, std::span<const ColoredCycle> cycles) {
  std::vector<int> perm(static_cast<std::size_t>(n), -1), colors(static_cast<std::size_t>(n), 0);
  for (const auto& c : cycles) {
    if (c.support.size() != c.colors.size() || c.support.empty())
      throw InvalidParameters("from_cycles: malformed cycle");
    for (std::size_t j = 0; j < c.support.size(); ++j) {
      const int i = c.support[j];
      if (i < 0 || i >= n || perm[static_cast<std::size_t>(i)] != -1)
        throw InvalidParameters("from_cycles: cycles are not disjoint");
      perm[static_cast<std::size_t>(i)] = c.support[(j + 1) % c.support.size()];
      colors[static_cast<std::size_t>(i)] = c.colors[j];
    }
  }
  return {r, std::move(perm), std::move(colors)};
}

std::vector<ColoredCycle> cycle_absolute_square(const ColoredCycle& c) {
  // (c cbar)(i_j) = c(zeta^(-z_j) i_(j+1)) = zeta^(z_(j+1) - z_j) i_(j+2).
  const auto d = c.support.size();
  auto step = [&](std::size_t j) { return pos_mod(c.colors[(j + 1) % d] - c.colors[j], c.r); };
  if (d % 2 == 1) {
    // Walk i_1, i_3, ..., which visits every index once when d is odd.
    ColoredCycle out{c.r, {}, {}};
    for (std::size_t t = 0, j = 0; t < d; ++t, j = (j + 2) % d) {
      out.support.push_back(c.support[j]);
      out.colors.push_back(step(j));
    }
    return {out};
  }
  ColoredCycle first{c.r, {}, {}}, second{c.r, {}, {}};
  for (std::size_t j = 0; j < d; j += 2) {
    first.support.push_back(c.support[j]);
    first.colors.push_back(step(j));
    second.support.push_back(c.support[j + 1]);
    second.colors.push_back(step(j + 1));
  }
  return {first, second};
}

std::string to_window(const ColoredPermutation& g) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < g.size(); ++i) {
    if (i) os << ",";
    os << "(" << g.color(i) << "," << g.image(i) + 1 << ")";
  }
  os << "]";
  return os.str();
}

ColoredPermutation parse_window(int r, const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  auto fail = [&]() -> ColoredPermutation { throw InvalidParameters("malformed window notation: " + text); };
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') return fail();
  std::vector<int> perm, colors;
  std::size_t pos = 1;
  const std::size_t end = s.size() - 1;
  auto read_int = [&](int& out) {
    std::size_t used = 0;
    try {
      out = std::stoi(s.substr(pos), &used);
    } catch (const std::exception&) {
      fail();
    }
    pos += used;
  };
  while (pos < end) {
    if (s[pos] != '(') fail();
    ++pos;
    int z = 0, v = 0;
    read_int(z);
    if (pos >= end || s[pos] != ',') fail();
    ++pos;
    read_int(v);
    if (pos >= end || s[pos] != ')') fail();
    ++pos;
    colors.push_back(z);
    perm.push_back(v - 1);
    if (pos < end) {
      if (s[pos] != ',') fail();
      ++pos;
    }
  }
  return {r, std::move(perm), std::move(colors)};
}

ColoredPermutation canonical_lift(int r, int q, const ColoredPermutation& lift) {
  if (q == 1) return lift;
  const int step = r / q;
  std::vector<int> best = lift.colors();
  std::vector<int> trial(best.size());
  for (int k = 1; k < q; ++k) {
    for (std::size_t i = 0; i < best.size(); ++i) trial[i] = (lift.colors()[i] + k * step) % r;
    if (trial < best) best = trial;
  }
  return {r, lift.perm(), std::move(best)};
}

ProjectiveElement canonicalize(const GroupParams& params, const ColoredPermutation& lift) {
  params.validate();
  if (lift.modulus() != params.r || lift.size() != params.n)
    throw InvalidParameters("canonicalize: element does not belong to G(r,n) for these parameters");
  if (!is_member(lift, params.p))
    throw InvalidParameters("canonicalize: " + to_window(lift) + " is not in G(r,p,n)");
  return {params, canonical_lift(params.r, params.q, lift)};
}

bool proj_equal(const ProjectiveElement& a, const ProjectiveElement& b) {
  return a.params == b.params && a.lift == b.lift;
}

std::uint64_t wreath_rank(const ColoredPermutation& g) {
  const int n = g.size();
  std::uint64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (g.image(j) < g.image(i)) ++smaller;
    rank = rank * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(smaller);
  }
  for (int i = 0; i < n; ++i) rank = rank * static_cast<std::uint64_t>(g.modulus()) + static_cast<std::uint64_t>(g.color(i));
  return rank;
}

}  // namespace gelfand
