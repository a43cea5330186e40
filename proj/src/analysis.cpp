#include "gelfand/analysis.hpp"

#include <chrono>
#include <limits>
#include <numeric>
#include <random>

#include "gelfand/tableaux.hpp"

namespace gelfand {

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t narrow(u128 v, const char* what) {
  if (v > std::numeric_limits<std::uint64_t>::max()) throw ArithmeticError(std::string(what) + ": overflow");
  return static_cast<std::uint64_t>(v);
}

u128 ipow(std::uint64_t base, int e) {
  u128 out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

bool all_parts_colorless(const std::vector<ColoredCycle>& cycles, const CyclePartition& pi) {
  for (const auto& s : pi.parts)
    if (part_color(cycles, s) != 0) return false;
  return true;
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

std::vector<std::uint64_t> abs_sqrt_counts_brute(const ProjectiveGroup& group) {
  std::vector<std::uint64_t> counts(group.size(), 0);
  for (const auto& u : group.elements()) ++counts[group.index_of(absolute_square(u))];
  return counts;
}

std::uint64_t abs_sqrt_count_brute(const ColoredPermutation& g, const GroupParams& params, std::uint64_t max_size) {
  check_size(params, max_size);
  const auto target = canonicalize(params, g).lift;
  std::uint64_t count = 0;
  for_each_element(params, [&](const ColoredPermutation& u) {
    if (canonical_lift(params.r, params.q, absolute_square(u)) == target) ++count;
  });
  return count;
}

std::uint64_t asr_count(const ColoredPermutation& g) {
  const auto cycles = cycle_decomposition(g);
  const auto r = static_cast<std::uint64_t>(g.modulus());
  u128 total = 0;
  for (const auto& pi : pi21(cycles)) {
    if (has_even_singleton(cycles, pi) || !all_parts_colorless(cycles, pi)) continue;
    total += ipow(r, pi.ell()) * pair_weight(cycles, pi);
  }
  return narrow(total, "asr_count");
}

int asrgrpn_weight(const std::vector<ColoredCycle>& cycles, const CyclePartition& pi, int p, int n) {
  int d = gcd(p, n);
  for (const auto& s : pi.parts) d = gcd(d, part_support(cycles, s));
  if (d == 1) return 1;
  if (d != 2) return 0;
  int odd_pairs = 0;
  for (const auto& s : pi.parts)
    if (s.is_pair() && cycles[static_cast<std::size_t>(s.first)].color() % 2 != 0) ++odd_pairs;
  return odd_pairs % 2 == 0 ? 2 : 0;
}

std::uint64_t asrgrpn_count(const ColoredPermutation& g, int p) {
  const int r = g.modulus(), n = g.size();
  if (p < 1 || r % p != 0) throw InvalidParameters("asrgrpn_count: p must divide r");
  const int d = gcd(p, n);
  if (d != 1 && d != 2) throw InvalidParameters("asrgrpn_count: needs GCD(p,n) in {1,2}");
  if (z_sum(g) % p != 0) throw InvalidParameters("asrgrpn_count: " + to_window(g) + " is not in G(r,p,n)");
  const auto cycles = cycle_decomposition(g);
  u128 total = 0;
  for (const auto& pi : pi21(cycles)) {
    if (has_even_singleton(cycles, pi) || !all_parts_colorless(cycles, pi)) continue;
    total += static_cast<u128>(asrgrpn_weight(cycles, pi, p, n)) * ipow(static_cast<std::uint64_t>(r), pi.ell()) *
             pair_weight(cycles, pi);
  }
  if (total % static_cast<unsigned>(p) != 0) throw ArithmeticError("asrgrpn_count: sum not divisible by p");
  return narrow(total / static_cast<unsigned>(p), "asrgrpn_count");
}

std::uint64_t asr_projective_count(const ColoredPermutation& g, const GroupParams& params) {
  params.validate();
  u128 total = 0;
  for (int k = 0; k < params.q; ++k) total += asrgrpn_count(scalar_mul(k * (params.r / params.q), g), params.p);
  if (total % static_cast<unsigned>(params.q) != 0) throw ArithmeticError("asr_projective_count: not divisible by q");
  return narrow(total / static_cast<unsigned>(params.q), "asr_projective_count");
}

std::uint64_t mod_lin_solutions(std::span<const std::int64_t> a, std::int64_t b, std::int64_t m) {
  if (m < 1 || a.empty()) throw InvalidParameters("mod_lin_solutions: needs m >= 1 and at least one coefficient");
  std::int64_t d = m;
  for (auto x : a) d = std::gcd(d, x);
  if (((b % d) + d) % d != 0) return 0;
  u128 out = static_cast<u128>(d);
  for (std::size_t i = 1; i < a.size(); ++i) out *= static_cast<std::uint64_t>(m);
  return narrow(out, "mod_lin_solutions");
}

std::uint64_t mod_lin_solutions_brute(std::span<const std::int64_t> a, std::int64_t b, std::int64_t m) {
  std::vector<std::int64_t> x(a.size(), 0);
  std::uint64_t count = 0;
  while (true) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = (s + (a[i] % m) * x[i]) % m;
    if (((s - b) % m + m) % m == 0) ++count;
    std::size_t pos = 0;
    while (pos < x.size() && x[pos] == m - 1) x[pos++] = 0;
    if (pos == x.size()) break;
    ++x[pos];
  }
  return count;
}

std::uint64_t involutions_over(const GroupParams& params, int cycles, bool has_fixed_point) {
  const auto r = static_cast<std::uint64_t>(params.r);
  const int p = params.p, q = params.q;
  u128 num = ipow(r, cycles);
  if (!has_fixed_point) {
    const int nr = params.n * params.r;
    if (p % 2 == 0 && q % 2 == 0 && nr % 4 == 0 && (nr / 4) % 2 == 1)
      num *= 2;
    else
      num *= static_cast<unsigned>(gcd(2, p) * gcd(2, q));
  }
  const auto den = static_cast<unsigned>(p * q);
  if (num % den != 0) throw ArithmeticError("involutions_over: count is not an integer for G" + params.to_string());
  return narrow(num / den, "involutions_over");
}

std::uint64_t involution_count_formula(const GroupParams& params) {
  params.validate();
  const int n = params.n;
  u128 total = 0;
  for (int k = 0; 2 * k <= n; ++k) {
    // Involutions with k two-cycles: n! / (k! (n-2k)! 2^k).
    u128 ways = 1;
    for (int i = 0; i < 2 * k; ++i) ways *= static_cast<unsigned>(n - i);
    for (int i = 1; i <= k; ++i) ways /= static_cast<unsigned>(2 * i);
    total += ways * involutions_over(params, n - k, n - 2 * k > 0);
  }
  return narrow(total, "involution_count_formula");
}

Involutory classify(const GroupParams& params) {
  params.validate();
  const int d = gcd(params.p, params.n);
  if (d == 1 || d == 2) return {true, "GCD(p,n)=" + std::to_string(d)};
  if (d == 4) {
    const bool all4 = params.r % 8 == 4 && params.p % 8 == 4 && params.q % 8 == 4 && params.n % 8 == 4;
    if (all4) return {true, "GCD=4, all ≡ 4 mod 8"};
    return {false, "GCD(p,n)=4 but not r≡p≡q≡n≡4 mod 8"};
  }
  return {false, "GCD(p,n)=" + std::to_string(d) + " > 2"};
}

bool is_involutory(const GroupParams& params) { return classify(params).involutory; }

Cyclotomic inner_product(const Character& a, const Character& b) {
  if (!(a.group == b.group) || a.classes.size() != b.classes.size())
    throw InvalidParameters("inner_product: characters of different groups");
  const int r = a.group.r;
  Cyclotomic total(r);
  std::uint64_t order = 0;
  for (std::size_t k = 0; k < a.classes.size(); ++k) {
    const auto size = static_cast<std::int64_t>(a.classes[k].size);
    total += Cyclotomic::from_int(r, size) * a.at(k) * b.at(k).conj();
    order += a.classes[k].size;
  }
  return total.exact_div(static_cast<std::int64_t>(order));
}

std::int64_t inner_product_int(const Character& a, const Character& b) {
  const auto v = inner_product(a, b);
  if (!v.is_integer()) throw ArithmeticError("inner product is not a rational integer: " + v.to_string());
  return v.to_integer();
}

bool VerificationReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const Check* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

Check homomorphism_check(const ProjectiveGroup& group, const ModelSpace& space, const VerifyOptions& opts) {
  Check c{"homomorphism", true, "", ""};
  const auto table = action_table(group, space, opts.action);
  const std::size_t dim = table.dimension;
  const auto n = group.size();
  const auto id = group.index_of(ColoredPermutation::identity(group.params().r, group.params().n));
  const UnitScalar one(group.params().r);
  for (std::size_t v = 0; v < dim; ++v)
    if (table.target[id * dim + v] != v || !(table.scalar[id * dim + v] == one)) {
      c.passed = false;
      c.detail = "identity does not act trivially";
      c.witness = to_window(space.basis()[v]);
      return c;
    }

  std::uint64_t pairs = 0;
  auto check_pair = [&](std::size_t g, std::size_t h) {
    ++pairs;
    const std::size_t gh = group.multiply(static_cast<std::uint32_t>(g), static_cast<std::uint32_t>(h));
    for (std::size_t v = 0; v < dim; ++v) {
      const auto hv = table.target[h * dim + v];
      const auto ghv = table.target[g * dim + hv];
      if (table.target[gh * dim + v] != ghv || !(table.scalar[gh * dim + v] == table.scalar[g * dim + hv] * table.scalar[h * dim + v])) {
        c.passed = false;
        c.detail = "rho(gh) != rho(g) rho(h) on basis vector " + to_window(space.basis()[v]);
        c.witness = to_window(group[g]) + " * " + to_window(group[h]);
        return false;
      }
    }
    return true;
  };

  const long double work = static_cast<long double>(n) * n * static_cast<long double>(dim);
  if (n <= opts.exhaustive_limit && work <= 5e8L) {
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t h = 0; h < n; ++h)
        if (!check_pair(g, h)) return c;
    c.detail = "exhaustive over " + std::to_string(pairs) + " pairs";
    return c;
  }
  // Generators times every element settles the whole group by induction;
  // random triples are an extra spot check.
  for (const auto& s : group.generators()) {
    const auto si = group.index_of(s);
    for (std::size_t h = 0; h < n; ++h)
      if (!check_pair(si, h)) return c;
  }
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::uint64_t t = 0; t < opts.random_triples; ++t)
    if (!check_pair(pick(rng), pick(rng))) return c;
  c.detail = "generators x group plus " + std::to_string(opts.random_triples) + " random pairs";
  return c;
}

std::string value_string(const Cyclotomic& v) { return v.to_string(); }

}  // namespace

VerificationReport verify_model(const GroupParams& params, const VerifyOptions& opts) {
  params.validate();
  const int d = gcd(params.p, params.n);
  if (d != 1 && d != 2)
    throw InvalidParameters("verify_model needs GCD(p,n) in {1,2}; G" + params.to_string() + " has GCD " +
                            std::to_string(d));
  check_action(opts.action, params);
  VerificationReport report{params, "model", {}, {}};
  Stopwatch total;

  Stopwatch t;
  const ProjectiveGroup group(params, opts.max_size);
  const ModelSpace space(params, opts.max_size);
  group.conjugacy_classes();
  report.timings.emplace_back("setup", t.seconds());

  t = Stopwatch();
  report.checks.push_back(homomorphism_check(group, space, opts));
  report.timings.emplace_back("homomorphism", t.seconds());

  t = Stopwatch();
  {
    const auto dim = model_dimension(params);
    Check c{"dimension", space.dimension() == dim, "", ""};
    c.detail = "|I(dual)| = " + std::to_string(space.dimension()) + ", model dimension = " + std::to_string(dim);
    report.checks.push_back(c);
  }
  report.timings.emplace_back("dimension", t.seconds());

  t = Stopwatch();
  const auto chi = character(group, space, opts.action, Block::all, opts.threads);
  const auto roots = abs_sqrt_counts_brute(group);
  {
    Check c{"character equals square-root count", true, "", ""};
    for (const auto& cls : chi.classes) {
      const auto idx = group.index_of(cls.representative);
      if (!cls.value.is_integer() || cls.value.to_integer() != static_cast<std::int64_t>(roots[idx])) {
        c.passed = false;
        c.detail = "chi = " + value_string(cls.value) + ", square roots = " + std::to_string(roots[idx]);
        c.witness = to_window(cls.representative);
        break;
      }
    }
    if (c.passed) c.detail = std::to_string(chi.classes.size()) + " classes";
    report.checks.push_back(c);
  }
  report.timings.emplace_back("character", t.seconds());

  t = Stopwatch();
  {
    Check c{"norm equals class count", false, "", ""};
    try {
      const auto norm = inner_product_int(chi, chi);
      c.passed = norm == static_cast<std::int64_t>(chi.classes.size());
      c.detail = "<chi,chi> = " + std::to_string(norm) + ", classes = " + std::to_string(chi.classes.size());
    } catch (const ArithmeticError& e) {
      c.detail = e.what();
    }
    report.checks.push_back(c);
  }
  {
    Check c{"closed form", true, "", ""};
    for (const auto& cls : chi.classes) {
      const auto expected = asr_projective_count(cls.representative, params);
      if (!cls.value.is_integer() || cls.value.to_integer() != static_cast<std::int64_t>(expected)) {
        c.passed = false;
        c.detail = "chi = " + value_string(cls.value) + ", closed form = " + std::to_string(expected);
        c.witness = to_window(cls.representative);
        break;
      }
    }
    if (c.passed) c.detail = params.p == 1 && params.q == 1 ? "partition sum" : "weighted partition sum";
    report.checks.push_back(c);
  }
  report.timings.emplace_back("closed form", t.seconds());
  report.timings.emplace_back("total", total.seconds());
  return report;
}

VerificationReport conjecture_check(int r, int p, int n, const VerifyOptions& opts) {
  const GroupParams params{r, p, 1, n};
  params.validate();
  if (gcd(p, n) != 2)
    throw InvalidParameters("conjecture_check needs GCD(p,n) = 2; got " + std::to_string(gcd(p, n)) + " for G" +
                            params.to_string());
  VerificationReport report{params, "conjecture", {}, {}};
  Stopwatch total;
  const ProjectiveGroup group(params, opts.max_size);
  const ModelSpace space(params, opts.max_size);
  const auto chi = character(group, space, Action::main, Block::all, opts.threads);
  const auto [sym, asym] = sym_asym_characters(group, space, Action::main, opts.threads);

  int unsplit = 0, split = 0, other = 0;
  std::uint64_t split_dim = 0;
  for (const auto& cls : irreducible_shape_classes(params)) {
    if (cls.shape.stabilizer == 1)
      ++unsplit;
    else if (cls.shape.stabilizer == 2) {
      ++split;
      split_dim += cls.irreducible_dimension;
    } else
      ++other;
  }

  auto pairing = [](const Character& a, const Character& b, std::int64_t expected, const std::string& name) {
    Check c{name, false, "necessary condition", ""};
    try {
      const auto v = inner_product_int(a, b);
      c.passed = v == expected;
      c.detail += ": got " + std::to_string(v) + ", expected " + std::to_string(expected);
    } catch (const ArithmeticError& e) {
      c.detail += ": " + std::string(e.what());
    }
    return c;
  };

  {
    Check c{"blocks sum to the model", true, "internal consistency", ""};
    for (std::size_t k = 0; k < chi.classes.size(); ++k)
      if (!(sym.at(k) + asym.at(k) == chi.at(k))) {
        c.passed = false;
        c.witness = to_window(chi.classes[k].representative);
        break;
      }
    if (other != 0) {
      c.passed = false;
      c.detail = "shape stabilizers larger than 2 present";
    }
    report.checks.push_back(c);
  }
  report.checks.push_back(pairing(sym, asym, 0, "<Sym,Asym> = 0"));
  report.checks.push_back(pairing(asym, asym, split, "<Asym,Asym> = s"));
  report.checks.push_back(pairing(sym, sym, unsplit + split, "<Sym,Sym> = u + s"));
  {
    std::uint64_t asym_dim = 0;
    for (const auto& v : space.basis())
      if (symmetry_class(v) == SymmetryClass::antisymmetric) ++asym_dim;
    Check c{"dim Asym = split half-dimensions", asym_dim == split_dim, "necessary condition", ""};
    c.detail += ": dim Asym = " + std::to_string(asym_dim) + ", expected " + std::to_string(split_dim) +
                " (u = " + std::to_string(unsplit) + ", s = " + std::to_string(split) + ")";
    report.checks.push_back(c);
  }
  report.timings.emplace_back("total", total.seconds());
  return report;
}

}  // namespace gelfand
