#include "gelfand/model.hpp"

#include <atomic>
#include <thread>

namespace gelfand {

std::string to_string(Action a) {
  switch (a) {
    case Action::apr: return "apr";
    case Action::modgrn: return "modgrn";
    case Action::main: return "main";
  }
  return "?";
}

Action parse_action(const std::string& name) {
  if (name == "apr") return Action::apr;
  if (name == "modgrn") return Action::modgrn;
  if (name == "main") return Action::main;
  throw InvalidParameters("unknown action '" + name + "' (expected apr, modgrn or main)");
}

int inv_pair_count(const ColoredPermutation& g, const ColoredPermutation& v) {
  int count = 0;
  for (int i = 0; i < v.size(); ++i) {
    const int j = v.image(i);
    if (j > i && g.image(j) < g.image(i)) ++count;
  }
  return count;
}

int color_dot(const ColoredPermutation& g, const ColoredPermutation& h) {
  if (g.modulus() != h.modulus() || g.size() != h.size()) throw InvalidParameters("color_dot: shape mismatch");
  std::int64_t s = 0;
  for (int i = 0; i < g.size(); ++i) s += static_cast<std::int64_t>(g.color(i)) * h.color(i);
  return pos_mod(s, g.modulus());
}

int u_shift(const ColoredPermutation& g, const ColoredPermutation& v) {
  if (v.size() == 0) return 0;
  const int back = inverse(underlying(g)).image(0);
  return pos_mod(v.color(0) - v.color(back), v.modulus());
}

std::vector<int> b_set(const ColoredPermutation& g, const ColoredPermutation& v) {
  const int r = v.modulus();
  if (r % 2 != 0) throw InvalidParameters("b_set: r must be even");
  std::vector<int> out;
  for (int i = 0; i < v.size(); ++i) {
    if (v.image(i) != i || v.color(i) % 2 == 0) continue;
    const int k = (v.color(i) - 1) / 2;
    const int t = pos_mod(k + g.color(i), r);
    if (t >= r / 2) out.push_back(i);
  }
  return out;
}

ActionResult act_apr(const ColoredPermutation& g, const ColoredPermutation& v) {
  const int r = g.modulus();
  int sign = inv_pair_count(g, v) % 2 ? -1 : 1;
  if (r % 2 == 0 && b_set(g, v).size() % 2) sign = -sign;
  return {compose(compose(g, v), transpose(g)), UnitScalar(r, 0, sign)};
}

ActionResult act_modgrn(const ColoredPermutation& g, const ColoredPermutation& v) {
  const int sign = inv_pair_count(g, v) % 2 ? -1 : 1;
  return {conjugate_by_perm(g, v), UnitScalar(g.modulus(), color_dot(g, v), sign)};
}

ActionResult act_main(const ColoredPermutation& g, const ColoredPermutation& v) {
  switch (symmetry_class(v)) {
    case SymmetryClass::symmetric: return act_modgrn(g, v);
    case SymmetryClass::antisymmetric:
      return {conjugate_by_perm(g, v), UnitScalar(g.modulus(), color_dot(g, v) + u_shift(g, v))};
    case SymmetryClass::neither: break;
  }
  throw InvalidParameters("act_main: " + to_window(v) + " is neither symmetric nor antisymmetric");
}

ActionResult act(Action a, const ColoredPermutation& g, const ColoredPermutation& v) {
  switch (a) {
    case Action::apr: return act_apr(g, v);
    case Action::modgrn: return act_modgrn(g, v);
    case Action::main: return act_main(g, v);
  }
  throw InvalidParameters("unknown action");
}

void check_action(Action a, const GroupParams& group) {
  group.validate();
  const auto name = to_string(a);
  if (a == Action::apr && (group.p != 1 || group.q != 1))
    throw InvalidParameters("action apr is defined on G(r,n) only, not on G" + group.to_string());
  if (a == Action::modgrn && group.p != 1)
    throw InvalidParameters("action modgrn needs p = 1, got G" + group.to_string());
  const int d = gcd(group.p, group.n);
  if (a == Action::main && d != 1 && d != 2)
    throw InvalidParameters("action main needs GCD(p,n) in {1,2}, got " + std::to_string(d) + " for G" +
                            group.to_string());
}

ModelSpace::ModelSpace(GroupParams group, std::uint64_t max_size) : group_(group) {
  group_.validate();
  for (auto& v : absolute_involutions(group_.dual(), max_size)) {
    index_.emplace(wreath_rank(v.lift), static_cast<std::uint32_t>(basis_.size()));
    basis_.push_back(std::move(v.lift));
  }
}

std::optional<std::uint32_t> ModelSpace::find(const ColoredPermutation& lift) const {
  if (lift.modulus() != group_.r || lift.size() != group_.n || z_sum(lift) % group_.q != 0) return std::nullopt;
  auto it = index_.find(wreath_rank(canonical_lift(group_.r, group_.p, lift)));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t ModelSpace::index_of(const ColoredPermutation& lift) const {
  if (auto idx = find(lift)) return *idx;
  throw InvalidParameters(to_window(lift) + " is not a basis element of the model of G" + group_.to_string());
}

namespace {

bool in_block(const ColoredPermutation& v, Block block) {
  switch (block) {
    case Block::all: return true;
    case Block::symmetric: return symmetry_class(v) == SymmetryClass::symmetric;
    case Block::antisymmetric: return symmetry_class(v) == SymmetryClass::antisymmetric;
  }
  return false;
}

}  // namespace

Cyclotomic trace(const ModelSpace& space, Action a, const ColoredPermutation& g, Block block) {
  const auto& params = space.group();
  std::vector<std::int64_t> hist(static_cast<std::size_t>(params.r), 0);
  for (const auto& v : space.basis()) {
    if (!in_block(v, block)) continue;
    const auto res = act(a, g, v);
    if (canonical_lift(params.r, params.p, res.target) == v) res.scalar.accumulate(hist);
  }
  return Cyclotomic::from_exponent_vector(params.r, hist);
}

Character character(const ProjectiveGroup& group, const ModelSpace& space, Action a, Block block, unsigned threads) {
  if (!(group.params() == space.group())) throw InvalidParameters("character: group and model space differ");
  check_action(a, group.params());
  const auto& classes = group.conjugacy_classes();
  Character chi{group.params(), std::vector<ClassValue>(classes.size())};
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < classes.size(); k = next++) {
      const auto& rep = group[classes[k].representative];
      chi.classes[k] = {rep, classes[k].size, trace(space, a, rep, block)};
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(classes.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return chi;
}

std::pair<Character, Character> sym_asym_characters(const ProjectiveGroup& group, const ModelSpace& space, Action a,
                                                    unsigned threads) {
  for (const auto& s : group.generators())
    for (const auto& v : space.basis())
      if (symmetry_class(act(a, s, v).target) != symmetry_class(v))
        throw ArithmeticError("symmetry blocks are not invariant: " + to_window(s) + " moves " + to_window(v));
  return {character(group, space, a, Block::symmetric, threads),
          character(group, space, a, Block::antisymmetric, threads)};
}

ActionTable action_table(const ProjectiveGroup& group, const ModelSpace& space, Action a) {
  check_action(a, group.params());
  ActionTable t;
  t.dimension = space.dimension();
  t.target.reserve(group.size() * t.dimension);
  t.scalar.reserve(group.size() * t.dimension);
  for (const auto& g : group.elements())
    for (const auto& v : space.basis()) {
      auto res = act(a, g, v);
      t.target.push_back(space.index_of(res.target));
      t.scalar.push_back(res.scalar);
    }
  return t;
}

}  // namespace gelfand
