#pragma once

#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "permsym/permutation.hpp"

namespace permsym {

enum class GroupKind { S, A, C, D };

char to_char(GroupKind kind);
GroupKind kind_from_char(char c);

/// Enumeration caps. Full-symmetric kinds (S, A) grow as n!, cyclic kinds
/// (C, D) stay linear in n, so they get separate limits.
struct SubgroupCaps {
  int max_n_full = 8;
  int max_n_cyclic = 20;
};

/// A fully enumerated subgroup of S_n of one of the four supported kinds.
/// Elements are sorted by one-line image vectors, identity first, and are
/// immutable after construction.
class PermSubgroup {
 public:
  PermSubgroup(GroupKind kind, int n, std::vector<Permutation> generators,
               std::vector<Permutation> elements);

  GroupKind kind() const { return kind_; }
  int n() const { return n_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

  std::optional<int> index_of(const Permutation& g) const;
  bool contains(const Permutation& g) const { return index_of(g).has_value(); }
  const Permutation& identity() const { return elements_.front(); }

  /// "S4"-style label.
  std::string label() const;

 private:
  GroupKind kind_;
  int n_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, int, PermutationHash> index_;
};

using SubgroupPtr = std::shared_ptr<const PermSubgroup>;

/// Constructs S_n / A_n / C_n / D_n with the standard generators: adjacent
/// transpositions for S, all 3-cycles for A, the full cycle eps = (1 2 ... n)
/// for C, and eps together with the mirror reversal tau for D.
SubgroupPtr make_subgroup(GroupKind kind, int n, const SubgroupCaps& caps = {});

/// eps = (1 2 ... n).
Permutation full_cycle(int n);
/// tau: j -> n+1-j. Acts on bit strings as string reversal.
Permutation mirror_reversal(int n);

}  // namespace permsym
