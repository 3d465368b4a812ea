#include "permsym/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

#include "permsym/errors.hpp"

namespace permsym {

char to_char(GroupKind kind) {
  switch (kind) {
    case GroupKind::S: return 'S';
    case GroupKind::A: return 'A';
    case GroupKind::C: return 'C';
    case GroupKind::D: return 'D';
  }
  throw InvalidInputError("unknown group kind");
}

GroupKind kind_from_char(char c) {
  switch (c) {
    case 'S': case 's': return GroupKind::S;
    case 'A': case 'a': return GroupKind::A;
    case 'C': case 'c': return GroupKind::C;
    case 'D': case 'd': return GroupKind::D;
    default: throw InvalidInputError(std::string("unknown group kind '") + c + "'");
  }
}

PermSubgroup::PermSubgroup(GroupKind kind, int n, std::vector<Permutation> generators,
                           std::vector<Permutation> elements)
    : kind_(kind), n_(n), generators_(std::move(generators)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i)
    index_.emplace(elements_[i], static_cast<int>(i));
}

std::optional<int> PermSubgroup::index_of(const Permutation& g) const {
  if (g.n() != n_) return std::nullopt;
  const auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string PermSubgroup::label() const {
  return std::string(1, to_char(kind_)) + std::to_string(n_);
}

Permutation full_cycle(int n) {
  std::vector<int> cycle(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) cycle[static_cast<std::size_t>(j) - 1] = j;
  return Permutation::from_cycle(n, cycle);
}

Permutation mirror_reversal(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) images[static_cast<std::size_t>(j) - 1] = n + 1 - j;
  return Permutation::from_images(std::move(images));
}

namespace {

std::vector<Permutation> generators_for(GroupKind kind, int n) {
  std::vector<Permutation> gens;
  switch (kind) {
    case GroupKind::S:
      for (int j = 1; j < n; ++j) gens.push_back(Permutation::transposition(n, j, j + 1));
      break;
    case GroupKind::A:
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          for (int k = j + 1; k <= n; ++k) {
            gens.push_back(Permutation::from_cycle(n, {i, j, k}));
            gens.push_back(Permutation::from_cycle(n, {i, k, j}));
          }
      break;
    case GroupKind::C:
      gens.push_back(full_cycle(n));
      break;
    case GroupKind::D:
      gens.push_back(full_cycle(n));
      gens.push_back(mirror_reversal(n));
      break;
  }
  return gens;
}

std::vector<Permutation> closure(int n, const std::vector<Permutation>& gens) {
  std::unordered_set<Permutation, PermutationHash> seen;
  std::deque<Permutation> todo;
  const Permutation id = Permutation::identity(n);
  seen.insert(id);
  todo.push_back(id);
  while (!todo.empty()) {
    const Permutation cur = std::move(todo.front());
    todo.pop_front();
    for (const auto& g : gens) {
      Permutation next = g * cur;
      if (seen.insert(next).second) todo.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

SubgroupPtr make_subgroup(GroupKind kind, int n, const SubgroupCaps& caps) {
  if (n < 1) throw InvalidInputError("group arity must be >= 1");
  const bool full = kind == GroupKind::S || kind == GroupKind::A;
  const int cap = full ? caps.max_n_full : caps.max_n_cyclic;
  if (n > cap)
    throw CapExceededError(std::string(1, to_char(kind)) + std::to_string(n) +
                           " exceeds the enumeration cap n <= " + std::to_string(cap));
  auto gens = generators_for(kind, n);
  auto elements = closure(n, gens);
  return std::make_shared<PermSubgroup>(kind, n, std::move(gens), std::move(elements));
}

}  // namespace permsym
