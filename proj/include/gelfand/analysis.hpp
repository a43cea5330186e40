#pragma once

// Independent counters and closed forms used to verify the models:
// absolute square roots, involution counts, the involutory predicate,
// character pairings and whole-model reports.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gelfand/colored_perm.hpp"
#include "gelfand/cycle_partition.hpp"
#include "gelfand/cyclotomic.hpp"
#include "gelfand/group.hpp"
#include "gelfand/model.hpp"

namespace gelfand {

/// #{u : u bar(u) = g} in G(r,p,q,n), for every element, by one scan.
std::vector<std::uint64_t> abs_sqrt_counts_brute(const ProjectiveGroup& group);
std::uint64_t abs_sqrt_count_brute(const ColoredPermutation& g, const GroupParams& params,
                                   std::uint64_t max_size = kDefaultMaxGroupSize);

/// Square roots in G(r,n) summed over cycle partitions with no singleton of
/// even length and z(s) = 0 on every part.
std::uint64_t asr_count(const ColoredPermutation& g);
/// Square roots in G(r,p,n); needs GCD(p,n) in {1,2} and g in G(r,p,n).
std::uint64_t asrgrpn_count(const ColoredPermutation& g, int p);
/// The weight eps(pi) in {0, 1, 2} for asrgrpn_count.
int asrgrpn_weight(const std::vector<ColoredCycle>& cycles, const CyclePartition& pi, int p, int n);
/// Square roots in G(r,p,q,n): the average of asrgrpn_count over C_q g.
std::uint64_t asr_projective_count(const ColoredPermutation& g, const GroupParams& params);

/// Solutions of sum a_i x_i = b (mod m).
std::uint64_t mod_lin_solutions(std::span<const std::int64_t> a, std::int64_t b, std::int64_t m);
std::uint64_t mod_lin_solutions_brute(std::span<const std::int64_t> a, std::int64_t b, std::int64_t m);

/// Absolute involutions of G(r,p,q,n) with a given underlying involution,
/// by the per-involution closed form.
std::uint64_t involutions_over(const GroupParams& params, int cycles, bool has_fixed_point);
/// Sum of involutions_over across all involutions of S_n.
std::uint64_t involution_count_formula(const GroupParams& params);

struct Involutory {
  bool involutory = false;
  std::string branch;
};
Involutory classify(const GroupParams& params);
bool is_involutory(const GroupParams& params);

/// (1/|G|) sum_classes |C| a(C) conj(b(C)).
Cyclotomic inner_product(const Character& a, const Character& b);
/// Same pairing, required to be a rational integer.
std::int64_t inner_product_int(const Character& a, const Character& b);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
  std::string witness;  // offending element in window notation
};

struct VerificationReport {
  GroupParams group;
  std::string kind;  // "model" or "conjecture"
  std::vector<Check> checks;
  std::vector<std::pair<std::string, double>> timings;  // seconds, not serialized to JSON

  bool passed() const;
  const Check* find(const std::string& name) const;
};

struct VerifyOptions {
  Action action = Action::main;
  std::uint64_t max_size = kDefaultMaxGroupSize;
  unsigned threads = 1;
  std::uint64_t exhaustive_limit = 2000;  // group order up to which all pairs (g,h) are checked
  std::uint64_t random_triples = 1000;
  std::uint64_t seed = 0x5eed;
};

/// Homomorphism, dimension, character against square roots, norm and
/// closed forms. Throws InvalidParameters unless GCD(p,n) in {1,2}.
VerificationReport verify_model(const GroupParams& params, const VerifyOptions& opts = {});

/// Necessary conditions of the symmetric/antisymmetric splitting on
/// G(r,p,n) with GCD(p,n) = 2.
VerificationReport conjecture_check(int r, int p, int n, const VerifyOptions& opts = {});

}  // namespace gelfand
