#include "gelfand/group.hpp"

#include <deque>

namespace gelfand {

void check_size(const GroupParams& params, std::uint64_t max_size) {
  const auto order = params.order();
  if (order > max_size)
    throw SizeBoundError("G" + params.to_string() + " has " + std::to_string(order) +
                         " elements, above the bound " + std::to_string(max_size));
}

ProjectiveGroup::ProjectiveGroup(GroupParams params, std::uint64_t max_size) : params_(params) {
  check_size(params_, max_size);
  const auto order = params_.order();
  elements_.reserve(order);
  index_.reserve(order);
  for_each_element(params_, [&](ColoredPermutation g) {
    index_.emplace(wreath_rank(g), static_cast<std::uint32_t>(elements_.size()));
    elements_.push_back(std::move(g));
  });
}

std::optional<std::uint32_t> ProjectiveGroup::find(const ColoredPermutation& lift) const {
  if (lift.modulus() != params_.r || lift.size() != params_.n || z_sum(lift) % params_.p != 0) return std::nullopt;
  auto it = index_.find(wreath_rank(canonical_lift(params_.r, params_.q, lift)));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t ProjectiveGroup::index_of(const ColoredPermutation& lift) const {
  if (auto idx = find(lift)) return *idx;
  throw InvalidParameters(to_window(lift) + " is not an element of G" + params_.to_string());
}

std::uint32_t ProjectiveGroup::multiply(std::uint32_t a, std::uint32_t b) const {
  return index_of(compose(elements_[a], elements_[b]));
}

std::vector<ColoredPermutation> ProjectiveGroup::generators() const {
  const int r = params_.r, n = params_.n;
  std::vector<ColoredPermutation> gens;
  auto add = [&](const ColoredPermutation& g) {
    auto c = canonical_lift(r, params_.q, g);
    if (!c.is_identity() && std::find(gens.begin(), gens.end(), c) == gens.end()) gens.push_back(std::move(c));
  };
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) perm[static_cast<std::size_t>(j)] = j;
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i) + 1]);
    add(ColoredPermutation::plain(r, perm));
  }
  auto diagonal = ColoredPermutation::identity(r, n);
  if (n >= 2) {
    std::vector<int> colors(static_cast<std::size_t>(n), 0);
    colors[0] = 1;
    colors[1] = r - 1;
    add(ColoredPermutation(r, diagonal.perm(), colors));
  }
  std::vector<int> colors(static_cast<std::size_t>(n), 0);
  colors[0] = params_.p % r;
  add(ColoredPermutation(r, diagonal.perm(), colors));
  return gens;
}

void ProjectiveGroup::compute_classes() const {
  if (!class_of_.empty() || elements_.empty()) return;
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  class_of_.assign(elements_.size(), unset);
  const auto gens = generators();
  std::vector<ColoredPermutation> gen_inverses;
  for (const auto& h : gens) gen_inverses.push_back(inverse(h));
  std::deque<std::uint32_t> queue;
  for (std::uint32_t start = 0; start < elements_.size(); ++start) {
    if (class_of_[start] != unset) continue;
    const auto cls = static_cast<std::uint32_t>(classes_.size());
    std::uint64_t count = 0;
    class_of_[start] = cls;
    queue.push_back(start);
    while (!queue.empty()) {
      const auto cur = queue.front();
      queue.pop_front();
      ++count;
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const auto next = index_of(compose(compose(gens[k], elements_[cur]), gen_inverses[k]));
        if (class_of_[next] == unset) {
          class_of_[next] = cls;
          queue.push_back(next);
        }
      }
    }
    classes_.push_back({start, count});
  }
}

const std::vector<ConjugacyClass>& ProjectiveGroup::conjugacy_classes() const {
  compute_classes();
  return classes_;
}

const std::vector<std::uint32_t>& ProjectiveGroup::class_index() const {
  compute_classes();
  return class_of_;
}

bool is_absolute_involution(const ColoredPermutation& lift, int q) {
  const auto sq = absolute_square(lift);
  if (!sq.is_scalar()) return false;
  const int r = lift.modulus();
  return sq.size() == 0 || sq.color(0) % (r / q) == 0;
}

std::vector<ProjectiveElement> absolute_involutions(const GroupParams& params, std::uint64_t max_size) {
  check_size(params, max_size);
  std::vector<ProjectiveElement> out;
  for_each_element(params, [&](const ColoredPermutation& g) {
    if (is_absolute_involution(g, params.q)) out.push_back({params, g});
  });
  return out;
}

std::vector<ProjectiveElement> absolute_involutions_by_symmetry(const GroupParams& params, std::uint64_t max_size) {
  check_size(params, max_size);
  std::vector<ProjectiveElement> out;
  for_each_element(params, [&](const ColoredPermutation& g) {
    const auto s = symmetry_class(g);
    if (s == SymmetryClass::symmetric || (s == SymmetryClass::antisymmetric && params.q % 2 == 0))
      out.push_back({params, g});
  });
  return out;
}

std::uint64_t count_absolute_involutions(const GroupParams& params, std::uint64_t max_size) {
  check_size(params, max_size);
  std::uint64_t count = 0;
  for_each_element(params, [&](const ColoredPermutation& g) {
    if (is_absolute_involution(g, params.q)) ++count;
  });
  return count;
}

}  // namespace gelfand
