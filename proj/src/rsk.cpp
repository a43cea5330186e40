#include "gelfand/rsk.hpp"

#include <algorithm>
#include <map>

namespace gelfand {

namespace {

// Row insertion of x into d; returns the row index where a new cell appeared.
std::size_t row_insert(Diagram& d, int x) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    auto& row = d[i];
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return i;
    }
    std::swap(*it, x);
  }
  d.push_back({x});
  return d.size() - 1;
}

// Removes the corner at the end of row `row` and reverse-bumps upward;
// returns the value ejected from the first row.
int reverse_bump(Diagram& d, std::size_t row) {
  int x = d[row].back();
  d[row].pop_back();
  if (d[row].empty()) d.erase(d.begin() + static_cast<std::ptrdiff_t>(row));
  for (std::size_t i = row; i-- > 0;) {
    auto& r = d[i];
    // Largest entry smaller than x.
    auto it = std::lower_bound(r.begin(), r.end(), x);
    --it;
    std::swap(*it, x);
  }
  return x;
}

}  // namespace

TableauPair rs_wreath(const ColoredPermutation& g) {
  const int r = g.modulus();
  TableauPair out{{std::vector<Diagram>(static_cast<std::size_t>(r))}, {std::vector<Diagram>(static_cast<std::size_t>(r))}};
  for (int i = 0; i < g.size(); ++i) {
    const auto slot = static_cast<std::size_t>(rsk_slot_of_color(g.color(i), r));
    const auto row = row_insert(out.P.slots[slot], g.image(i) + 1);
    auto& q = out.Q.slots[slot];
    if (row == q.size()) q.emplace_back();
    q[row].push_back(i + 1);
  }
  return out;
}

ColoredPermutation rs_wreath_inverse(const TableauPair& pq) {
  if (pq.P.shape() != pq.Q.shape()) throw InvalidParameters("rs_wreath_inverse: P and Q have different shapes");
  if (!pq.P.is_standard() || !pq.Q.is_standard()) throw InvalidParameters("rs_wreath_inverse: tableaux are not standard");
  const int r = pq.P.modulus();
  const int n = pq.P.shape().size();
  std::vector<int> perm(static_cast<std::size_t>(n)), colors(static_cast<std::size_t>(n));
  for (int s = 0; s < r; ++s) {
    Diagram P = pq.P.slots[static_cast<std::size_t>(s)];
    Diagram Q = pq.Q.slots[static_cast<std::size_t>(s)];
    while (!Q.empty()) {
      // The largest recorded position sits at the end of some row.
      std::size_t row = 0;
      for (std::size_t i = 1; i < Q.size(); ++i)
        if (Q[i].back() > Q[row].back()) row = i;
      const int pos = Q[row].back() - 1;
      Q[row].pop_back();
      if (Q[row].empty()) Q.erase(Q.begin() + static_cast<std::ptrdiff_t>(row));
      perm[static_cast<std::size_t>(pos)] = reverse_bump(P, row) - 1;
      colors[static_cast<std::size_t>(pos)] = pos_mod(-s, r);
    }
  }
  return {r, std::move(perm), std::move(colors)};
}

ProjectiveTableauPair rs_projective(const ProjectiveElement& v) {
  const auto pq = rs_wreath(v.lift);
  const int q = v.params.q;
  return {orbit_class(pq.P, q), orbit_class(pq.Q, q), orbit_class(pq.P.shape(), q), orbit_class(pq.Q.shape(), q)};
}

bool RsReport::passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.passed; });
}

namespace {

PropertyResult property(std::string name) {
  PropertyResult p;
  p.name = std::move(name);
  return p;
}

}  // namespace

RsReport rs_properties_check(const GroupParams& params, std::uint64_t max_size) {
  const ProjectiveGroup group(params, max_size);
  const int r = params.r, q = params.q;
  RsReport report{params, {}};
  auto same_shape = property("shape(P) == shape(Q)");
  auto fibers = property("fiber size == |(C_q)_mu|");
  auto shift_law = property("zeta_r g -> rotated pair");
  auto bar_inverse = property("bar(g)^-1 -> (Q, P)");
  auto half_shift = property("v bar(v) = -1 iff Q = P shifted by r/2");
  auto projective = property("class pair independent of the lift");

  auto fail = [](PropertyResult& pr, const ColoredPermutation& g, std::string detail) {
    if (!pr.passed) return;
    pr.passed = false;
    pr.witness = to_window(g);
    pr.detail = std::move(detail);
  };

  std::map<std::pair<MultiTableau, MultiTableau>, std::uint64_t> fiber_count;
  for (const auto& lift : group.elements()) {
    const ProjectiveElement v{params, lift};
    const auto proj = rs_projective(v);
    ++same_shape.checked;
    if (proj.shape_P.representative != proj.shape_Q.representative) fail(same_shape, lift, "shape classes differ");
    ++fiber_count[{proj.P.representative, proj.Q.representative}];

    for (int k = 0; k < q; ++k) {
      const auto other = scalar_mul(k * (r / q), lift);
      ++projective.checked;
      const auto alt = rs_projective({params, other});
      if (alt.P != proj.P || alt.Q != proj.Q) fail(projective, other, "translate maps to a different class pair");

      // Wreath-level laws on every lift.
      const auto pq = rs_wreath(other);
      ++shift_law.checked;
      const auto shifted = rs_wreath(scalar_mul(1, other));
      if (shifted.P != shift(pq.P, 1) || shifted.Q != shift(pq.Q, 1)) fail(shift_law, other, "shift law violated");
      ++bar_inverse.checked;
      const auto bi = rs_wreath(bar(inverse(other)));
      if (bi.P != pq.Q || bi.Q != pq.P) fail(bar_inverse, other, "bar-inverse law violated");
      if (r % 2 == 0) {
        ++half_shift.checked;
        const auto sq = absolute_square(other);
        const bool minus_one = sq == ColoredPermutation::scalar(r, params.n, r / 2);
        const bool paired = pq.Q == shift(pq.P, r / 2);
        if (minus_one != paired) fail(half_shift, other, minus_one ? "v bar(v) = -1 but Q is not the half shift of P" : "Q is the half shift of P but v bar(v) != -1");
      }
    }
  }

  // Every same-shape class pair must be hit exactly |(C_q)_mu| times.
  std::uint64_t expected_pairs = 0;
  for (const auto& mu : orbit_quotient(enumerate_fer(r, params.n, params.p), q)) {
    const auto tableaux = enumerate_st(mu.representative);
    // Tableau classes of this shape class: every tableau of the
    // representative shape lies in a distinct orbit once the shape
    // stabilizer is accounted for.
    std::vector<OrbitClass<MultiTableau>> classes = orbit_quotient(tableaux, q);
    std::vector<MultiTableau> reps;
    for (auto& c : classes) reps.push_back(c.representative);
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    for (const auto& a : reps)
      for (const auto& b : reps) {
        ++expected_pairs;
        ++fibers.checked;
        auto it = fiber_count.find({a, b});
        const std::uint64_t got = it == fiber_count.end() ? 0 : it->second;
        if (got != static_cast<std::uint64_t>(mu.stabilizer) && fibers.passed) {
          fibers.passed = false;
          fibers.detail = "pair of shape " + to_string(mu.representative) + " has " + std::to_string(got) +
                          " preimages, expected " + std::to_string(mu.stabilizer);
        }
      }
  }
  if (expected_pairs != fiber_count.size() && fibers.passed) {
    fibers.passed = false;
    fibers.detail = "image contains " + std::to_string(fiber_count.size()) + " class pairs, expected " +
                    std::to_string(expected_pairs);
  }

  if (r % 2 != 0) half_shift.detail = "not applicable (r odd)";
  report.properties = {same_shape, fibers, shift_law, bar_inverse, half_shift, projective};
  return report;
}

}  // namespace gelfand
