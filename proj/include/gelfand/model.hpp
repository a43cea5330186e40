#pragma once

// Gelfand models on the span of absolute involutions.
//
// The acting group is G(r,p,q,n); the basis is the set of absolute
// involutions of the dual group G(r,q,p,n), stored as canonical lifts in
// G(r,q,n) modulo the scalars C_p. Actions are evaluated on lifts: g is any
// lift in G(r,p,n), v any lift in G(r,q,n).

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gelfand/colored_perm.hpp"
#include "gelfand/cyclotomic.hpp"
#include "gelfand/cycle_partition.hpp"
#include "gelfand/group.hpp"

namespace gelfand {

enum class Action { apr, modgrn, main };
std::string to_string(Action a);
Action parse_action(const std::string& name);

struct ActionResult {
  ColoredPermutation target;  // a lift of the image basis vector
  UnitScalar scalar;
};

/// |Inv(|g|) cap Pair(|v|)|.
int inv_pair_count(const ColoredPermutation& g, const ColoredPermutation& v);
/// sum_i z_i(g) z_i(h) in Z_r.
int color_dot(const ColoredPermutation& g, const ColoredPermutation& h);
/// z_1(v) - z_{|g|^-1(1)}(v) in Z_r.
int u_shift(const ColoredPermutation& g, const ColoredPermutation& v);
/// Fixed points i of |v| with z_i(v) = 2k+1 and k + z_i(g) in [r/2, r-1]
/// (mod r); 0-based. Requires r even.
std::vector<int> b_set(const ColoredPermutation& g, const ColoredPermutation& v);

/// C_v -> sign C_{g v g^t}.
ActionResult act_apr(const ColoredPermutation& g, const ColoredPermutation& v);
/// C_v -> zeta^<g,v> (-1)^inv C_{|g| v |g|^-1}.
ActionResult act_modgrn(const ColoredPermutation& g, const ColoredPermutation& v);
/// As act_modgrn on symmetric v; zeta^(<g,v> + u(g,v)) on antisymmetric v.
/// Throws InvalidParameters when v is neither.
ActionResult act_main(const ColoredPermutation& g, const ColoredPermutation& v);
ActionResult act(Action a, const ColoredPermutation& g, const ColoredPermutation& v);

/// Throws InvalidParameters unless the action is defined on G(r,p,q,n):
/// apr needs p = q = 1, modgrn needs p = 1, main needs GCD(p,n) in {1,2}.
void check_action(Action a, const GroupParams& group);

class ModelSpace {
 public:
  explicit ModelSpace(GroupParams group, std::uint64_t max_size = kDefaultMaxGroupSize);

  const GroupParams& group() const { return group_; }
  GroupParams basis_params() const { return group_.dual(); }
  const std::vector<ColoredPermutation>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }

  std::optional<std::uint32_t> find(const ColoredPermutation& lift) const;
  std::uint32_t index_of(const ColoredPermutation& lift) const;

 private:
  GroupParams group_;
  std::vector<ColoredPermutation> basis_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
};

enum class Block { all, symmetric, antisymmetric };

/// Trace of g on the basis (or one symmetry block of it).
Cyclotomic trace(const ModelSpace& space, Action a, const ColoredPermutation& g, Block block = Block::all);

struct ClassValue {
  ColoredPermutation representative;
  std::uint64_t size = 0;
  Cyclotomic value;
};

struct Character {
  GroupParams group;
  std::vector<ClassValue> classes;  // in conjugacy-class order

  const Cyclotomic& at(std::size_t class_index) const { return classes[class_index].value; }
};

/// Character of the model, one trace per conjugacy class, split over
/// `threads` workers.
Character character(const ProjectiveGroup& group, const ModelSpace& space, Action a, Block block = Block::all,
                    unsigned threads = 1);

/// Characters of the symmetric and antisymmetric blocks. Throws if the
/// action does not preserve the blocks.
std::pair<Character, Character> sym_asym_characters(const ProjectiveGroup& group, const ModelSpace& space, Action a,
                                                    unsigned threads = 1);

/// Dense action table: entry [g * dim + v] holds the image index and the
/// scalar of group element g on basis vector v.
struct ActionTable {
  std::size_t dimension = 0;
  std::vector<std::uint32_t> target;
  std::vector<UnitScalar> scalar;
};
ActionTable action_table(const ProjectiveGroup& group, const ModelSpace& space, Action a);

// ---------------------------------------------------------------------------
// Fixed points of the permutation part of the main action.

/// Fix(g) = {w in G(r,q,n) : w bar(w) in C_p, |g| w |g|^-1 in C_p w}.
struct FixSetting {
  int r = 1;
  int p = 1;  // scalars quotiented out of the dual group
  int q = 1;  // membership: z(w) = 0 mod q
};

struct FixPart {
  std::vector<ColoredPermutation> s_plus, s_minus, a_plus, a_minus;
  std::size_t size() const { return s_plus.size() + s_minus.size() + a_plus.size() + a_minus.size(); }
};

struct FixDecomposition {
  ColoredPermutation g;
  FixSetting setting;
  std::vector<ColoredCycle> cycles;
  std::vector<CyclePartition> partitions;
  std::vector<FixPart> parts;  // parallel to partitions
  std::size_t size() const;
};

/// Filter over all involutions commuting with |g| and all colorings.
FixDecomposition fix_decompose_brute(const ColoredPermutation& g, const FixSetting& setting,
                                     std::uint64_t max_candidates = 20'000'000);
/// Built part by part from the explicit shapes of the four sets on a single
/// cycle or a pair of cycles. Requires GCD(p, n) in {1, 2}.
FixDecomposition fix_decompose_table(const ColoredPermutation& g, const FixSetting& setting);

/// Sum of the main-action scalar over a list of lifts.
Cyclotomic phi_sum(const ColoredPermutation& g, const std::vector<ColoredPermutation>& ws);
/// (1/p) sum over Fix(g) of the main-action scalar.
Cyclotomic fix_trace(const FixDecomposition& fix);

}  // namespace gelfand
