#pragma once

#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "permsym/orbit.hpp"
#include "permsym/phase.hpp"
#include "permsym/subgroup.hpp"

namespace permsym {

/// A homomorphism t: G -> U(1), i.e. an element of the dual group. Values
/// are stored per group element as exact roots of unity, so evaluating and
/// composing characters never involves a floating point tolerance.
class PhaseHom {
 public:
  PhaseHom(SubgroupPtr group, std::vector<PhaseFraction> values);

  const SubgroupPtr& group() const { return group_; }
  const std::vector<PhaseFraction>& values() const { return values_; }
  const PhaseFraction& value_at(int element_index) const;

  /// t(g); throws InvalidInputError when g is not a member of the group.
  PhaseFraction evaluate(const Permutation& g) const;

  bool is_trivial() const;

  /// Same group kind and arity, identical value maps.
  bool operator==(const PhaseHom& rhs) const;

 private:
  SubgroupPtr group_;
  std::vector<PhaseFraction> values_;
};

/// Every homomorphism G -> U(1), exactly once, computed from the
/// multiplication table: commutator-subgroup closure, abelian quotient
/// decomposition, then character lift. The trivial character comes first;
/// the rest are sorted by their angle-fraction value vectors.
std::vector<PhaseHom> dual_group(const SubgroupPtr& G);

/// Extends generator values to the whole group by the homomorphism law.
/// Returns nullopt when the assignment is inconsistent.
std::optional<PhaseHom> phase_hom_from_generator_values(const SubgroupPtr& G,
                                                        const std::vector<PhaseFraction>& gen_values);

/// True iff t(g) = 1 for every g in the stabilizer of the orbit
/// representative (equivalently, t is constant on the stabilizer).
bool compatible_with_orbit(const PhaseHom& t, const OrbitRecord& orb);

/// Serialization: {kind, n, generator -> angle fraction}. The full value map
/// is reconstructed on load.
nlohmann::json phase_hom_to_json(const PhaseHom& t);
PhaseHom phase_hom_from_json(const nlohmann::json& j, const SubgroupCaps& caps = {});

}  // namespace permsym
