#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "gelfand/model.hpp"
#include "support.hpp"

using namespace gelfand;

namespace {

std::vector<ColoredPermutation> all_lists(const FixPart& part) {
  std::vector<ColoredPermutation> out;
  for (const auto* v : {&part.s_plus, &part.s_minus, &part.a_plus, &part.a_minus}) out.insert(out.end(), v->begin(), v->end());
  return out;
}

bool same(const FixDecomposition& a, const FixDecomposition& b) {
  if (a.partitions != b.partitions) return false;
  for (std::size_t t = 0; t < a.parts.size(); ++t) {
    const auto &x = a.parts[t], &y = b.parts[t];
    if (x.s_plus != y.s_plus || x.s_minus != y.s_minus || x.a_plus != y.a_plus || x.a_minus != y.a_minus) return false;
  }
  return true;
}

ColoredPermutation with_cycle_type(int r, const std::vector<int>& lengths) {
  int n = 0;
  for (int d : lengths) n += d;
  std::vector<int> perm(static_cast<std::size_t>(n));
  int start = 0;
  for (int d : lengths) {
    for (int j = 0; j < d; ++j) perm[static_cast<std::size_t>(start + j)] = start + (j + 1) % d;
    start += d;
  }
  std::vector<int> colors(static_cast<std::size_t>(n));
  for (auto& c : colors) c = testing::uniform(0, r - 1);
  return ColoredPermutation(r, perm, colors);
}

}  // namespace

TEST_CASE("identity: everything is symmetric and commutes") {
  for (const auto& [r, n] : {std::pair{2, 3}, std::pair{3, 3}, std::pair{4, 2}}) {
    const auto fix = fix_decompose_brute(ColoredPermutation::identity(r, n), {r, 1, 1});
    std::vector<ColoredPermutation> collected;
    for (const auto& part : fix.parts) {
      collected.insert(collected.end(), part.s_plus.begin(), part.s_plus.end());
      CHECK(part.s_minus.empty());
      CHECK(part.a_plus.empty());
      CHECK(part.a_minus.empty());
    }
    std::vector<ColoredPermutation> expected;
    for (const auto& v : absolute_involutions({r, 1, 1, n})) expected.push_back(v.lift);
    std::sort(collected.begin(), collected.end());
    std::sort(expected.begin(), expected.end());
    CHECK(collected == expected);
  }
}

TEST_CASE("a single odd cycle") {
  for (const auto& setting : {FixSetting{3, 1, 1}, FixSetting{4, 1, 1}, FixSetting{4, 2, 1}, FixSetting{6, 2, 1}}) {
    const auto g = with_cycle_type(setting.r, {3});
    for (const auto& fix : {fix_decompose_brute(g, setting), fix_decompose_table(g, setting)}) {
      REQUIRE(fix.parts.size() == 1);
      CHECK(fix.parts[0].s_plus.size() == static_cast<std::size_t>(setting.r));
      CHECK(fix.parts[0].s_minus.empty());
      CHECK(fix.parts[0].a_plus.empty());
      CHECK(fix.parts[0].a_minus.empty());
    }
  }
}

TEST_CASE("part sizes for p = 1") {
  for (int r : {2, 3, 4}) {
    for (int d = 1; d <= 4; ++d) {
      const auto single = fix_decompose_brute(with_cycle_type(r, {d}), {r, 1, 1});
      CHECK(single.parts[0].s_plus.size() == static_cast<std::size_t>(d % 2 ? r : 2 * r));
      const auto pair = fix_decompose_brute(ColoredPermutation::plain(r, with_cycle_type(r, {d, d}).perm()), {r, 1, 1});
      // the partition pairing both cycles
      for (std::size_t t = 0; t < pair.partitions.size(); ++t)
        if (pair.partitions[t].ell() == 1) CHECK(pair.parts[t].s_plus.size() == static_cast<std::size_t>(d * r));
    }
  }
}

TEST_CASE("a pair of equal odd cycles with -1 in the quotient") {
  const auto g = ColoredPermutation::plain(2, with_cycle_type(2, {3, 3}).perm());
  for (const auto& fix : {fix_decompose_brute(g, {2, 2, 1}), fix_decompose_table(g, {2, 2, 1})}) {
    REQUIRE(fix.partitions.size() == 2);
    for (std::size_t t = 0; t < 2; ++t) {
      if (fix.partitions[t].ell() != 1) continue;
      CHECK(fix.parts[t].s_plus.size() == 6);
      CHECK(fix.parts[t].a_plus.size() == 6);
    }
  }
}

TEST_CASE("table construction agrees with the brute filter") {
  const std::vector<FixSetting> settings{{2, 1, 1}, {3, 1, 1}, {4, 1, 1}, {2, 2, 1}, {4, 2, 1}, {4, 2, 2},
                                         {4, 1, 2}, {6, 2, 1}, {6, 2, 3}, {6, 1, 3}, {4, 2, 4}};
  for (const auto& setting : settings) {
    for (int n = 1; n <= 4; ++n) {
      if (gcd(setting.p, n) > 2) continue;
      for (int t = 0; t < 15; ++t) {
        const auto g = testing::random_member(setting.r, setting.p, n);
        const auto brute = fix_decompose_brute(g, setting);
        const auto table = fix_decompose_table(g, setting);
        CHECK_MESSAGE(same(brute, table), to_window(g) << " r=" << setting.r << " p=" << setting.p
                                                       << " q=" << setting.q);
      }
    }
  }
  CHECK_THROWS_AS(fix_decompose_table(ColoredPermutation::identity(3, 3), {3, 3, 1}), InvalidParameters);
}

TEST_CASE("the G(3,9) example") {
  const auto g = parse_window(3, "[(1,4),(2,2),(0,8),(2,1),(1,5),(0,7),(0,6),(2,9),(1,3)]");
  const auto brute = fix_decompose_brute(g, {3, 1, 1});
  const auto table = fix_decompose_table(g, {3, 1, 1});
  CHECK(same(brute, table));
  CHECK(brute.partitions.size() == 4);
  CHECK(fix_trace(brute) == Cyclotomic::from_int(3, 54));
  CHECK(fix_trace(table) == Cyclotomic::from_int(3, 54));
}

TEST_CASE("fixed-point traces equal model traces") {
  for (const auto& params : {GroupParams{2, 2, 1, 4}, GroupParams{4, 2, 1, 3}, GroupParams{4, 2, 2, 2},
                             GroupParams{6, 2, 1, 2}, GroupParams{4, 1, 2, 2}, GroupParams{3, 1, 1, 3},
                             GroupParams{2, 1, 2, 2}, GroupParams{6, 2, 3, 2}}) {
    const ProjectiveGroup group(params);
    const ModelSpace space(params);
    for (const auto& cls : group.conjugacy_classes()) {
      const auto& g = group[cls.representative];
      const auto expected = trace(space, Action::main, g);
      CHECK_MESSAGE(fix_trace(fix_decompose_table(g, {params.r, params.p, params.q})) == expected,
                    params.to_string() << " " << to_window(g));
      CHECK(fix_trace(fix_decompose_brute(g, {params.r, params.p, params.q})) == expected);
    }
  }
}

TEST_CASE("cancellations inside a cycle partition") {
  int even_cases = 0, minus_cases = 0;
  for (const auto& setting : {FixSetting{2, 2, 1}, FixSetting{4, 2, 1}, FixSetting{4, 1, 1}, FixSetting{6, 2, 1},
                              FixSetting{4, 2, 2}}) {
    for (int n = 2; n <= 6; ++n) {
      if (gcd(setting.p, n) > 2) continue;
      for (int t = 0; t < 10; ++t) {
        const auto g = testing::random_member(setting.r, setting.p, n);
        const auto fix = fix_decompose_table(g, setting);
        for (std::size_t k = 0; k < fix.partitions.size(); ++k) {
          const auto& part = fix.parts[k];
          if (has_even_singleton(fix.cycles, fix.partitions[k])) {
            CHECK(phi_sum(g, all_lists(part)).is_zero());
            ++even_cases;
          }
          CHECK(phi_sum(g, part.s_minus) == -phi_sum(g, part.a_minus));
          if (!part.s_minus.empty() || !part.a_minus.empty()) ++minus_cases;
        }
      }
    }
  }
  CHECK(even_cases > 0);
  CHECK(minus_cases > 0);
}
