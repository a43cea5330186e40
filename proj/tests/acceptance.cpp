// Acceptance suite: one PASS/FAIL line per criterion.
// Usage: acceptance <path-to-gelfand-cli>

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "gelfand/analysis.hpp"
#include "gelfand/rsk.hpp"
#include "gelfand/tableaux.hpp"

using namespace gelfand;

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) note << "first failure: " << what << "; ";
    passed = passed && ok;
  }
};

std::mt19937_64 rng(0xacce55);

int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

ColoredPermutation random_member(int r, int p, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> colors(static_cast<std::size_t>(n));
  int sum = 0;
  for (auto& c : colors) sum += (c = uniform(0, r - 1));
  colors.back() = pos_mod(colors.back() - sum % p, r);
  return ColoredPermutation(r, perm, colors);
}

// Every valid (r,p,q,n) with r <= 8, n <= 5 and at most 10^5 elements.
std::vector<GroupParams> grid() {
  std::vector<GroupParams> out;
  for (int r = 1; r <= 8; ++r)
    for (int p = 1; p <= r; ++p)
      for (int q = 1; q <= r; ++q)
        for (int n = 1; n <= 5; ++n) {
          const GroupParams params{r, p, q, n};
          if (params.valid() && params.order() <= 100'000) out.push_back(params);
        }
  return out;
}

Outcome golden_example() {
  Outcome o;
  const auto g = parse_window(3, "[(1,4),(2,2),(0,8),(2,1),(1,5),(0,7),(0,6),(2,9),(1,3)]");
  const auto cycles = cycle_decomposition(g);
  const std::vector<std::vector<int>> supports{{0, 3}, {1}, {2, 7, 8}, {4}, {5, 6}};
  const std::vector<int> colors{0, 2, 0, 1, 0};
  bool listed = cycles.size() == 5;
  for (std::size_t k = 0; listed && k < 5; ++k)
    listed = cycles[k].support == supports[k] && cycles[k].color() == colors[k];
  o.require(listed, "cycle decomposition");
  const auto pis = pi21(cycles);
  o.require(pis.size() == 4, "four cycle partitions");
  const auto formula = asr_count(g);
  o.require(formula == 54, "square-root formula");

  const auto table = fix_decompose_table(g, {3, 1, 1});
  const auto brute = fix_decompose_brute(g, {3, 1, 1});
  const auto expected = Cyclotomic::from_int(3, 54);
  // trace of the modgrn action over the fixed basis vectors
  std::vector<std::int64_t> hist(3, 0);
  for (const auto& part : table.parts)
    for (const auto* ws : {&part.s_plus, &part.s_minus, &part.a_plus, &part.a_minus})
      for (const auto& w : *ws) {
        const auto res = act_modgrn(g, w);
        if (res.target == w) res.scalar.accumulate(hist);
      }
  const auto modgrn_trace = Cyclotomic::from_exponent_vector(3, hist);
  o.require(fix_trace(table) == expected && fix_trace(brute) == expected, "Fix(g) trace");
  o.require(modgrn_trace == expected, "modgrn trace over Fix(g)");
  o.require(table.size() == brute.size(), "both Fix(g) constructions");
  o.note << "cycles " << cycles.size() << ", partitions " << pis.size() << ", formula " << formula
         << ", Fix(g) trace " << fix_trace(table).to_string() << " (|Fix| = " << table.size() << ")";
  return o;
}

Outcome model_suite() {
  Outcome o;
  std::vector<GroupParams> groups;
  for (int n = 1; n <= 5; ++n) groups.push_back({1, 1, 1, n});
  for (int n = 1; n <= 4; ++n) groups.push_back({2, 1, 1, n});
  for (const auto& g : {GroupParams{2, 2, 1, 4}, GroupParams{3, 1, 1, 3}, GroupParams{4, 1, 1, 3},
                        GroupParams{4, 2, 1, 3}, GroupParams{6, 2, 1, 2}, GroupParams{2, 1, 2, 2},
                        GroupParams{4, 1, 2, 2}, GroupParams{4, 2, 2, 2}})
    groups.push_back(g);
  for (const auto& params : groups) {
    const auto report = verify_model(params);
    o.require(report.checks.size() == 5, "five checks on G" + params.to_string());
    for (const auto& c : report.checks) o.require(c.passed, "G" + params.to_string() + " " + c.name + ": " + c.detail);
  }
  o.note << groups.size() << " groups, 5 checks each";
  return o;
}

Outcome model_equivalence() {
  Outcome o;
  for (const auto& [r, n] : {std::pair{2, 3}, std::pair{3, 2}, std::pair{4, 2}, std::pair{2, 4}}) {
    const GroupParams params{r, 1, 1, n};
    const ProjectiveGroup group(params);
    const ModelSpace space(params);
    const auto a = character(group, space, Action::apr);
    const auto b = character(group, space, Action::modgrn);
    bool same = a.classes.size() == b.classes.size();
    for (std::size_t k = 0; same && k < a.classes.size(); ++k) same = a.at(k) == b.at(k);
    // class function on every element, not only representatives
    for (std::size_t i = 0; same && i < group.size(); i += 1 + group.size() / 200)
      same = trace(space, Action::apr, group[i]) == trace(space, Action::modgrn, group[i]);
    o.require(same, "G" + params.to_string());
  }
  o.note << "apr and modgrn characters agree on G(2,3), G(3,2), G(4,2), G(2,4)";
  return o;
}

Outcome classification() {
  Outcome o;
  int groups = 0, positive = 0;
  bool saw_exotic = false, saw_negative = false;
  for (const auto& params : grid()) {
    ++groups;
    const bool involutory = is_involutory(params);
    const bool equal = model_dimension(params) == count_absolute_involutions(params.dual());
    o.require(involutory == equal, "G" + params.to_string());
    positive += involutory;
    if (params == GroupParams{4, 4, 4, 4}) saw_exotic = involutory && equal;
    if (params == GroupParams{3, 3, 1, 3}) saw_negative = !involutory && !equal;
  }
  o.require(saw_exotic, "G(4,4,4,4) positive");
  o.require(saw_negative, "G(3,3,1,3) negative");
  o.note << groups << " groups, " << positive << " involutory";
  return o;
}

Outcome dual_symmetry() {
  Outcome o;
  int groups = 0;
  for (const auto& params : grid()) {
    ++groups;
    const auto brute = count_absolute_involutions(params);
    const auto formula = involution_count_formula(params);
    o.require(brute == formula, "formula on G" + params.to_string());
    o.require(formula == involution_count_formula(params.dual()), "formula duality on G" + params.to_string());
    if (params.dual().order() <= 100'000)
      o.require(brute == count_absolute_involutions(params.dual()), "brute duality on G" + params.to_string());
  }
  o.note << groups << " groups, brute force and closed form";
  return o;
}

Outcome rs_properties() {
  Outcome o;
  for (const auto& params : {GroupParams{2, 1, 1, 3}, GroupParams{3, 1, 1, 2}, GroupParams{4, 1, 2, 2},
                             GroupParams{4, 2, 1, 2}}) {
    const auto report = rs_properties_check(params);
    for (const auto& prop : report.properties)
      o.require(prop.passed, "G" + params.to_string() + " " + prop.name + " " + prop.detail);
  }
  o.note << "shape, fiber, shift, bar-inverse, half-shift and lift checks exhaustive on 4 groups";
  return o;
}

Outcome formula_oracles() {
  Outcome o;
  std::uint64_t elements = 0;
  std::vector<GroupParams> groups;
  for (int n = 1; n <= 5; ++n) groups.push_back({1, 1, 1, n});
  for (int n = 1; n <= 4; ++n) groups.push_back({2, 1, 1, n});
  for (const auto& g : {GroupParams{2, 2, 1, 4}, GroupParams{3, 1, 1, 3}, GroupParams{4, 1, 1, 3},
                        GroupParams{4, 2, 1, 3}, GroupParams{6, 2, 1, 2}, GroupParams{2, 1, 2, 2},
                        GroupParams{4, 1, 2, 2}, GroupParams{4, 2, 2, 2}})
    groups.push_back(g);
  for (const auto& params : groups) {
    const ProjectiveGroup group(params);
    const auto counts = abs_sqrt_counts_brute(group);
    for (std::size_t k = 0; k < group.size(); ++k) {
      ++elements;
      if (params.p == 1 && params.q == 1) o.require(asr_count(group[k]) == counts[k], "asr_count " + to_window(group[k]));
      if (params.q == 1)
        o.require(asrgrpn_count(group[k], params.p) == counts[k], "asrgrpn_count " + to_window(group[k]));
      o.require(asr_projective_count(group[k], params) == counts[k], "quotient count " + to_window(group[k]));
    }
  }
  for (int t = 0; t < 100; ++t) {
    const int k = uniform(1, 4), m = uniform(1, k == 4 ? 12 : 30);
    std::vector<std::int64_t> a(static_cast<std::size_t>(k));
    for (auto& x : a) x = uniform(-50, 50);
    const std::int64_t b = uniform(-50, 50);
    o.require(mod_lin_solutions(a, b, m) == mod_lin_solutions_brute(a, b, m), "modular equation");
  }
  for (int t = 0; t < 200; ++t) {
    const int r = uniform(1, 8), d = uniform(1, 8);
    std::vector<int> perm(static_cast<std::size_t>(d)), colors(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
      perm[static_cast<std::size_t>(j)] = (j + 1) % d;
      colors[static_cast<std::size_t>(j)] = uniform(0, r - 1);
    }
    const ColoredPermutation c(r, perm, colors);
    const auto cycles = cycle_decomposition(c);
    const auto pieces = cycle_absolute_square(cycles.front());
    const auto direct = cycle_decomposition(absolute_square(c));
    const auto rebuilt = from_cycles(r, d, pieces);
    o.require(rebuilt == absolute_square(c), "cycle square of " + to_window(c));
    o.require(pieces.size() == direct.size(), "cycle count of " + to_window(c));
  }
  o.note << elements << " elements, 100 congruences, 200 cycles";
  return o;
}

Outcome vanishing() {
  Outcome o;
  const std::vector<FixSetting> settings{{2, 2, 1}, {4, 2, 1}, {4, 1, 1}, {6, 2, 1}, {4, 2, 2}, {8, 2, 1}, {6, 1, 1}};
  int even = 0, minus = 0, nontrivial = 0, attempts = 0;
  while ((even < 50 || minus < 50) && attempts < 100'000) {
    ++attempts;
    const auto& s = settings[static_cast<std::size_t>(uniform(0, static_cast<int>(settings.size()) - 1))];
    const int n = uniform(2, 6);
    if (gcd(s.p, n) > 2) continue;
    const auto g = random_member(s.r, s.p, n);
    const auto fix = fix_decompose_table(g, s);
    const auto k = static_cast<std::size_t>(uniform(0, static_cast<int>(fix.partitions.size()) - 1));
    const auto& part = fix.parts[k];
    if (even < 50 && has_even_singleton(fix.cycles, fix.partitions[k])) {
      std::vector<ColoredPermutation> all;
      for (const auto* ws : {&part.s_plus, &part.s_minus, &part.a_plus, &part.a_minus})
        all.insert(all.end(), ws->begin(), ws->end());
      o.require(phi_sum(g, all).is_zero(), "even singleton at " + to_window(g));
      ++even;
    }
    if (minus < 50 && (!part.s_minus.empty() || !part.a_minus.empty())) {
      o.require(phi_sum(g, part.s_minus) == -phi_sum(g, part.a_minus), "S-/A- at " + to_window(g));
      ++minus;
      nontrivial += !phi_sum(g, part.s_minus).is_zero();
    }
  }
  o.require(even == 50 && minus == 50, "sampling");
  o.note << even << " even-singleton sums, " << minus << " S-/A- pairs (" << nontrivial << " nonzero)";
  return o;
}

Outcome conjecture() {
  Outcome o;
  int groups = 0, all_hold = 0;
  std::ostringstream findings;
  for (const auto& params : grid()) {
    if (params.q != 1 || gcd(params.p, params.n) != 2) continue;
    ++groups;
    const auto report = conjecture_check(params.r, params.p, params.n);
    o.require(report.checks.size() == 5, "report shape for G" + params.to_string());
    o.require(report.find("blocks sum to the model") && report.find("blocks sum to the model")->passed,
              "internal consistency for G" + params.to_string());
    bool holds = true;
    for (const auto& c : report.checks)
      if (!c.passed) {
        holds = false;
        findings << " G" << params.to_string() << " fails '" << c.name << "' (" << c.detail << ");";
      }
    all_hold += holds;
    if (params == GroupParams{2, 2, 1, 4} || params == GroupParams{4, 2, 1, 2})
      o.require(holds, "conditions on G" + params.to_string());
  }
  o.note << groups << " groups with GCD(p,n)=2, conditions hold on " << all_hold;
  if (!findings.str().empty()) o.note << "; findings:" << findings.str();
  return o;
}

struct Run {
  int exit = -1;
  std::string out;
};

Run run(const std::string& cmd) {
  Run result;
  FILE* pipe = ::popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) return result;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, got);
  const int status = ::pclose(pipe);
  result.exit = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

Outcome determinism(const std::string& cli) {
  Outcome o;
  if (cli.empty()) {
    o.require(false, "no CLI path given");
    return o;
  }
  const auto cache = std::filesystem::temp_directory_path() / ("gelfand-acceptance-" + std::to_string(::getpid()));
  std::filesystem::remove_all(cache);
  const std::string base = cli + " --cache-dir " + cache.string() + " ";
  int compared = 0;
  for (const std::string args : {"verify 2 2 1 4", "verify 4 2 2 2", "character 4 2 1 3", "character 3 1 1 3 --action apr",
                                 "character 4 1 2 2 --action modgrn"}) {
    const auto cold = run(base + args);
    const auto warm = run(base + args);
    const auto a = run(base + "--no-cache " + args);
    const auto b = run(base + "--no-cache " + args);
    o.require(cold.exit == 0 && !cold.out.empty(), args + " runs");
    o.require(cold.out == warm.out && warm.out == a.out && a.out == b.out, args + " is byte-identical");
    compared += 4;
  }
  std::filesystem::remove_all(cache);
  o.note << compared << " runs compared (cold cache, warm cache, uncached)";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  struct Criterion {
    int id;
    const char* title;
    double limit_seconds;  // 0 = no limit
    std::function<Outcome()> body;
  };
  const std::vector<Criterion> criteria{
      {1, "golden example in G(3,9)", 10, golden_example},
      {2, "model verification suite", 300, model_suite},
      {3, "apr and modgrn models agree", 0, model_equivalence},
      {4, "involutory classification cross-check", 600, classification},
      {5, "dual involution counts", 0, dual_symmetry},
      {6, "RS properties", 0, rs_properties},
      {7, "formula oracles", 0, formula_oracles},
      {8, "vanishing sums", 0, vanishing},
      {9, "conjecture evidence", 0, conjecture},
      {10, "determinism of CLI output", 0, [&] { return determinism(cli); }},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.passed = false;
      o.note << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.passed = false;
      o.note << "; over the " << c.limit_seconds << " s limit";
    }
    failures += !o.passed;
    std::printf("[%s] criterion %d: %s: %s (%.2f s)\n", o.passed ? "PASS" : "FAIL", c.id, c.title, o.note.str().c_str(),
                secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
