#include <array>
#include <algorithm>
#include <functional>

#include "gelfand/model.hpp"

namespace gelfand {

std::size_t FixDecomposition::size() const {
  std::size_t s = 0;
  for (const auto& p : parts) s += p.size();
  return s;
}

namespace {

enum class Kind { s_plus, s_minus, a_plus, a_minus };

std::vector<ColoredPermutation>& slot(FixPart& part, Kind k) {
  switch (k) {
    case Kind::s_plus: return part.s_plus;
    case Kind::s_minus: return part.s_minus;
    case Kind::a_plus: return part.a_plus;
    case Kind::a_minus: return part.a_minus;
  }
  return part.s_plus;
}

FixDecomposition skeleton(const ColoredPermutation& g, const FixSetting& setting) {
  if (setting.r != g.modulus()) throw InvalidParameters("Fix(g): modulus mismatch");
  if (setting.p < 1 || setting.q < 1 || setting.r % setting.p != 0 || setting.r % setting.q != 0)
    throw InvalidParameters("Fix(g): p and q must divide r");
  FixDecomposition fix{g, setting, cycle_decomposition(g), {}, {}};
  fix.partitions = pi21(fix.cycles);
  fix.parts.resize(fix.partitions.size());
  return fix;
}

void involutions_rec(std::vector<int>& sigma, int i, const std::function<void()>& visit) {
  const int n = static_cast<int>(sigma.size());
  while (i < n && sigma[static_cast<std::size_t>(i)] >= 0) ++i;
  if (i == n) {
    visit();
    return;
  }
  sigma[static_cast<std::size_t>(i)] = i;
  involutions_rec(sigma, i + 1, visit);
  for (int j = i + 1; j < n; ++j) {
    if (sigma[static_cast<std::size_t>(j)] >= 0) continue;
    sigma[static_cast<std::size_t>(i)] = j;
    sigma[static_cast<std::size_t>(j)] = i;
    involutions_rec(sigma, i + 1, visit);
    sigma[static_cast<std::size_t>(j)] = -1;
  }
  sigma[static_cast<std::size_t>(i)] = -1;
}

// One building block of a Fix set, as (position, image, color) triples.
using Piece = std::vector<std::array<int, 3>>;

}  // namespace

FixDecomposition fix_decompose_brute(const ColoredPermutation& g, const FixSetting& setting,
                                     std::uint64_t max_candidates) {
  auto fix = skeleton(g, setting);
  const int r = setting.r, n = g.size();
  const int step = r / setting.p;
  const auto& perm_g = g.perm();

  std::vector<std::vector<int>> commuting;
  std::vector<int> sigma(static_cast<std::size_t>(n), -1);
  involutions_rec(sigma, 0, [&] {
    for (int i = 0; i < n; ++i)
      if (sigma[static_cast<std::size_t>(perm_g[static_cast<std::size_t>(i)])] !=
          perm_g[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])])
        return;
    commuting.push_back(sigma);
  });
  long double candidates = static_cast<long double>(commuting.size());
  for (int i = 0; i < n; ++i) candidates *= r;
  if (candidates > static_cast<long double>(max_candidates))
    throw SizeBoundError("Fix(g) brute force needs too many candidates");

  std::vector<int> colors(static_cast<std::size_t>(n), 0);
  for (const auto& s : commuting) {
    std::fill(colors.begin(), colors.end(), 0);
    while (true) {
      const ColoredPermutation w(r, s, colors);
      const auto sq = absolute_square(w);
      if (z_sum(w) % setting.q == 0 && sq.is_scalar() && (n == 0 || sq.color(0) % step == 0)) {
        const auto conj = conjugate_by_perm(g, w);
        const int shift = n == 0 ? 0 : pos_mod(conj.color(0) - w.color(0), r);
        if (shift % step == 0 && conj == scalar_mul(shift, w)) {
          const auto sym = symmetry_class(w);
          if (sym == SymmetryClass::neither || (shift != 0 && 2 * shift != r))
            throw InvalidParameters("Fix(g) contains " + to_window(w) +
                                    ", which lies outside the four symmetry classes");
          const bool plus = shift == 0;
          const Kind kind = sym == SymmetryClass::symmetric ? (plus ? Kind::s_plus : Kind::s_minus)
                                                            : (plus ? Kind::a_plus : Kind::a_minus);
          const auto pi = partition_of(fix.cycles, w);
          auto it = std::find(fix.partitions.begin(), fix.partitions.end(), pi);
          if (it == fix.partitions.end()) throw InvalidParameters("Fix(g): element without a cycle partition");
          slot(fix.parts[static_cast<std::size_t>(it - fix.partitions.begin())], kind).push_back(w);
        }
      }
      int pos = n - 1;
      while (pos >= 0 && colors[static_cast<std::size_t>(pos)] == r - 1) colors[static_cast<std::size_t>(pos--)] = 0;
      if (pos < 0) break;
      ++colors[static_cast<std::size_t>(pos)];
    }
  }
  for (auto& part : fix.parts)
    for (auto* v : {&part.s_plus, &part.s_minus, &part.a_plus, &part.a_minus}) std::sort(v->begin(), v->end());
  return fix;
}

FixDecomposition fix_decompose_table(const ColoredPermutation& g, const FixSetting& setting) {
  auto fix = skeleton(g, setting);
  const int r = setting.r, n = g.size();
  const int d_pn = gcd(setting.p, n);
  if (d_pn != 1 && d_pn != 2) throw InvalidParameters("Fix(g) tables need GCD(p,n) in {1,2}");
  const bool minus = setting.p % 2 == 0;  // -1 lies in C_p
  const int half = r / 2;
  auto at = [](const std::vector<int>& sup, int h) {
    const int d = static_cast<int>(sup.size());
    return sup[static_cast<std::size_t>(pos_mod(h - 1, d))];
  };

  // Singleton pieces: i_h -> zeta^(k + alt*h*r/2) i_(h+offset).
  auto single = [&](const std::vector<int>& sup, int offset, bool alt) {
    std::vector<Piece> out;
    const int d = static_cast<int>(sup.size());
    for (int k = 0; k < r; ++k) {
      Piece piece;
      for (int h = 1; h <= d; ++h) piece.push_back({at(sup, h), at(sup, h + offset), k + (alt ? h * half : 0)});
      out.push_back(std::move(piece));
    }
    return out;
  };
  // Pair pieces: i_h -> zeta^(k + alt*h*r/2) j_(h+l),
  //              j_h -> zeta^(k + neg*r/2 + alt*(h-l)*r/2) i_(h-l).
  auto paired = [&](const std::vector<int>& a, const std::vector<int>& b, bool alt, bool neg) {
    std::vector<Piece> out;
    const int d = static_cast<int>(a.size());
    for (int k = 0; k < r; ++k)
      for (int l = 0; l < d; ++l) {
        Piece piece;
        for (int h = 1; h <= d; ++h) {
          piece.push_back({at(a, h), at(b, h + l), k + (alt ? h * half : 0)});
          piece.push_back({at(b, h), at(a, h - l), k + (neg ? half : 0) + (alt ? (h - l) * half : 0)});
        }
        out.push_back(std::move(piece));
      }
    return out;
  };
  auto join = [](std::vector<Piece> x, const std::vector<Piece>& y) {
    x.insert(x.end(), y.begin(), y.end());
    return x;
  };

  for (std::size_t t = 0; t < fix.partitions.size(); ++t) {
    const auto& pi = fix.partitions[t];
    std::array<std::vector<std::vector<Piece>>, 4> per_kind;  // per kind, per part
    for (const auto& s : pi.parts) {
      const auto& a = fix.cycles[static_cast<std::size_t>(s.first)].support;
      const int d = static_cast<int>(a.size());
      std::array<std::vector<Piece>, 4> sets;
      if (!s.is_pair()) {
        if (d % 2 == 1) {
          sets[0] = single(a, 0, false);
        } else {
          sets[0] = join(single(a, 0, false), single(a, d / 2, false));
          if (minus) {
            if (d % 4 == 2) {
              sets[1] = single(a, 0, true);
              sets[3] = single(a, d / 2, true);
            } else {
              sets[1] = join(single(a, 0, true), single(a, d / 2, true));
            }
          }
        }
      } else {
        const auto& b = fix.cycles[static_cast<std::size_t>(s.second)].support;
        sets[0] = paired(a, b, false, false);
        if (minus) {
          sets[2] = paired(a, b, false, true);
          if (d % 2 == 0) {
            sets[1] = paired(a, b, true, false);
            sets[3] = paired(a, b, true, true);
          }
        }
      }
      for (int k = 0; k < 4; ++k) per_kind[static_cast<std::size_t>(k)].push_back(std::move(sets[static_cast<std::size_t>(k)]));
    }

    // Cartesian product of the per-part sets, kind by kind.
    for (int k = 0; k < 4; ++k) {
      const auto& factors = per_kind[static_cast<std::size_t>(k)];
      auto& dest = slot(fix.parts[t], static_cast<Kind>(k));
      std::vector<int> perm(static_cast<std::size_t>(n)), colors(static_cast<std::size_t>(n));
      std::function<void(std::size_t)> rec = [&](std::size_t f) {
        if (f == factors.size()) {
          ColoredPermutation w(r, perm, colors);
          if (z_sum(w) % setting.q == 0) dest.push_back(std::move(w));
          return;
        }
        for (const auto& piece : factors[f]) {
          for (const auto& [pos, img, col] : piece) {
            perm[static_cast<std::size_t>(pos)] = img;
            colors[static_cast<std::size_t>(pos)] = pos_mod(col, r);
          }
          rec(f + 1);
        }
      };
      rec(0);
      std::sort(dest.begin(), dest.end());
      dest.erase(std::unique(dest.begin(), dest.end()), dest.end());
    }
  }
  return fix;
}

Cyclotomic phi_sum(const ColoredPermutation& g, const std::vector<ColoredPermutation>& ws) {
  std::vector<std::int64_t> hist(static_cast<std::size_t>(g.modulus()), 0);
  for (const auto& w : ws) act_main(g, w).scalar.accumulate(hist);
  return Cyclotomic::from_exponent_vector(g.modulus(), hist);
}

Cyclotomic fix_trace(const FixDecomposition& fix) {
  Cyclotomic total(fix.setting.r);
  for (const auto& part : fix.parts)
    for (const auto* v : {&part.s_plus, &part.s_minus, &part.a_plus, &part.a_minus}) total += phi_sum(fix.g, *v);
  return total.exact_div(fix.setting.p);
}

}  // namespace gelfand
