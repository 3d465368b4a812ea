#include "permsym/orbit.hpp"

#include <algorithm>
#include <map>

#include "permsym/errors.hpp"

namespace permsym {

bool OrbitRecord::contains(const BitString& J) const {
  return std::find(members.begin(), members.end(), J) != members.end();
}

std::size_t OrbitRecord::member_index(const BitString& J) const {
  const auto it = std::find(members.begin(), members.end(), J);
  if (it == members.end()) throw InvalidInputError("bit string is not a member of the orbit");
  return static_cast<std::size_t>(it - members.begin());
}

namespace {

OrbitRecord build_orbit(const SubgroupPtr& G, const BitString& I) {
  OrbitRecord orb{G, I, {}, {}, 0};

  // Orbit members and the stabilizer size of the seed string.
  std::map<std::uint64_t, BitString, std::greater<>> members;
  std::size_t stab = 0;
  for (const auto& g : G->elements()) {
    BitString J = act_on_bits(g, I);
    if (J == I) ++stab;
    members.emplace(J.index(), std::move(J));
  }
  orb.stabilizer_order = stab;
  orb.representative = members.begin()->second;
  orb.members.reserve(members.size());
  for (auto& [idx, J] : members) orb.members.push_back(std::move(J));

  // First group element (in element order) mapping the representative to
  // each member.
  orb.transversal.assign(orb.members.size(), G->identity());
  std::vector<bool> found(orb.members.size(), false);
  std::size_t remaining = orb.members.size();
  for (const auto& g : G->elements()) {
    const BitString J = act_on_bits(g, orb.representative);
    const std::size_t i = orb.member_index(J);
    if (!found[i]) {
      found[i] = true;
      orb.transversal[i] = g;
      if (--remaining == 0) break;
    }
  }
  return orb;
}

}  // namespace

OrbitRecord orbit_of(const SubgroupPtr& G, const BitString& I) {
  if (!G) throw InvalidInputError("null group");
  if (G->n() != I.n()) throw InvalidInputError("arity mismatch between group and bit string");
  return build_orbit(G, I);
}

std::vector<OrbitRecord> all_orbits(const SubgroupPtr& G) {
  if (!G) throw InvalidInputError("null group");
  const int n = G->n();
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<bool> visited(total, false);
  std::vector<OrbitRecord> orbits;
  for (std::uint64_t idx = total; idx-- > 0;) {
    const std::uint64_t rep_candidate = idx;
    if (visited[rep_candidate]) continue;
    OrbitRecord orb = build_orbit(G, BitString::from_index(n, rep_candidate));
    for (const auto& J : orb.members) visited[J.index()] = true;
    orbits.push_back(std::move(orb));
  }
  return orbits;  // reps appear in descending order by construction
}

std::vector<Permutation> stabilizer_of(const PermSubgroup& G, const BitString& I) {
  if (G.n() != I.n()) throw InvalidInputError("arity mismatch between group and bit string");
  std::vector<Permutation> stab;
  for (const auto& g : G.elements())
    if (act_on_bits(g, I) == I) stab.push_back(g);
  return stab;
}

}  // namespace permsym
