#include "permsym/dicke.hpp"

#include <cmath>

#include "permsym/errors.hpp"

namespace permsym {

namespace {
constexpr double kProjectorCutoff = 1e-10;
}

GenDickeState dicke_state_from_orbit(const OrbitRecord& orbit, const PhaseHom& t) {
  if (!compatible_with_orbit(t, orbit))
    throw InvalidInputError(
        "character is not constant on the orbit stabilizer; the generalized Dicke phases are ill defined");
  const int n = orbit.representative.n();
  StateVector unnormalized(n);
  for (std::size_t i = 0; i < orbit.members.size(); ++i) {
    const PhaseFraction phase = t.evaluate(orbit.transversal[i]).inverse();
    unnormalized.set_amp(orbit.members[i].index(), phase.value());
  }
  StateVector state(n, unnormalized.amps() / std::sqrt(static_cast<double>(orbit.members.size())));
  return {orbit, t, std::move(state), std::move(unnormalized)};
}

GenDickeState dicke_state(const SubgroupPtr& G, const PhaseHom& t, const BitString& I) {
  return dicke_state_from_orbit(orbit_of(G, I), t);
}

std::optional<PhaseHom> extract_character(const StateVector& psi, const SubgroupPtr& G,
                                          bool verify_all_elements) {
  if (!G) throw InvalidInputError("null group");
  if (G->n() != psi.n()) throw InvalidInputError("arity mismatch between group and state");
  if (std::abs(psi.norm() - 1.0) > 1e-6)
    throw InvalidInputError("extract_character requires a normalized state");

  std::vector<PhaseFraction> gen_values;
  gen_values.reserve(G->generators().size());
  for (const auto& g : G->generators()) {
    const StateVector moved = act_on_state(g, psi);
    const auto lambda = equal_up_to_phase(moved, psi);
    if (!lambda) return std::nullopt;
    const auto snapped = PhaseFraction::snap(*lambda, g.order());
    if (!snapped) return std::nullopt;
    gen_values.push_back(*snapped);
  }
  auto t = phase_hom_from_generator_values(G, gen_values);
  if (!t) return std::nullopt;

  if (verify_all_elements) {
    for (std::size_t i = 0; i < G->order(); ++i) {
      const StateVector moved = act_on_state(G->elements()[i], psi);
      const auto lambda = equal_up_to_phase(moved, psi);
      if (!lambda) return std::nullopt;
      if (std::abs(*lambda - t->value_at(static_cast<int>(i)).value()) > 1e-6) return std::nullopt;
    }
  }
  return t;
}

DickeDecomposition dicke_decompose(const StateVector& psi, const SubgroupPtr& G) {
  auto t = extract_character(psi, G);
  if (!t) throw NotInvariantError("state is not invariant under " + G->label());
  DickeDecomposition d{*t, {}};
  for (const auto& orb : all_orbits(G)) {
    const std::complex<double> c = psi.amp(orb.representative);
    if (std::abs(c) >= kSupportEps) d.terms.emplace_back(orb.representative, c);
  }
  return d;
}

StateVector reconstruct(const DickeDecomposition& d) {
  const SubgroupPtr& G = d.character.group();
  StateVector psi(G->n());
  for (const auto& [rep, c] : d.terms) {
    const GenDickeState dk = dicke_state(G, d.character, rep);
    psi.amps() += c * dk.unnormalized.amps();
  }
  return psi;
}

std::vector<StateVector> invariant_subspace(const SubgroupPtr& G, const PhaseHom& t) {
  if (!G) throw InvalidInputError("null group");
  std::vector<StateVector> basis;
  const double scale = 1.0 / static_cast<double>(G->order());
  for (const auto& orb : all_orbits(G)) {
    // Column of the character projector at the representative, restricted to
    // the orbit support. It vanishes identically exactly when t is not
    // constant on the stabilizer.
    Eigen::VectorXcd column = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(orb.members.size()));
    for (std::size_t i = 0; i < G->order(); ++i) {
      const BitString J = act_on_bits(G->elements()[i], orb.representative);
      column(static_cast<Eigen::Index>(orb.member_index(J))) +=
          t.value_at(static_cast<int>(i)).inverse().value();
    }
    column *= scale;
    if (column.norm() < kProjectorCutoff) continue;
    basis.push_back(dicke_state_from_orbit(orb, t).state);
  }
  return basis;
}

}  // namespace permsym
