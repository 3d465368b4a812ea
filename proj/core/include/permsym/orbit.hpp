#pragma once

#include <cstdint>
#include <vector>

#include "permsym/bitstring.hpp"
#include "permsym/subgroup.hpp"

namespace permsym {

/// A G-orbit of bit strings. The representative is the member with the
/// largest binary value; members are listed by descending index with the
/// representative first. transversal[i] is one group element g with
/// g.representative = members[i], so |members| * stabilizer_order = |G|.
struct OrbitRecord {
  SubgroupPtr group;
  BitString representative;
  std::vector<BitString> members;
  std::vector<Permutation> transversal;
  std::size_t stabilizer_order = 0;

  std::size_t size() const { return members.size(); }
  bool contains(const BitString& J) const;
  /// Index of J in members; throws if J is not in the orbit.
  std::size_t member_index(const BitString& J) const;
};

OrbitRecord orbit_of(const SubgroupPtr& G, const BitString& I);

/// Partition of all 2^n strings into orbits, sorted by representative
/// descending. Every string appears in exactly one orbit.
std::vector<OrbitRecord> all_orbits(const SubgroupPtr& G);

/// All g in G with g.I = I.
std::vector<Permutation> stabilizer_of(const PermSubgroup& G, const BitString& I);

}  // namespace permsym
