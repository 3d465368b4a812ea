#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "permsym/character.hpp"
#include "permsym/orbit.hpp"
#include "permsym/state_vector.hpp"

namespace permsym {

/// The generalized Dicke state of a G-orbit with respect to a character t:
/// the amplitude of |J> is t(g)^{-1} (times 1/sqrt(|orbit|) when normalized)
/// for any g with g.representative = J, and zero off the orbit. Well defined
/// exactly when t is constant on the orbit stabilizer.
struct GenDickeState {
  OrbitRecord orbit;
  PhaseHom character;
  StateVector state;         // normalized
  StateVector unnormalized;  // representative coefficient exactly 1
};

/// Throws InvalidInputError when t is not constant on the stabilizer of the
/// orbit representative (the obstruction that makes the phases ill defined).
GenDickeState dicke_state(const SubgroupPtr& G, const PhaseHom& t, const BitString& I);

/// Same construction from a prebuilt orbit record; the phases are read off
/// the record's transversal, so any valid transversal yields the same state.
GenDickeState dicke_state_from_orbit(const OrbitRecord& orbit, const PhaseHom& t);

/// If g.psi = lambda_g psi holds (up to the phase-equality tolerance) for
/// every generator g, returns the induced character with each phase snapped
/// to the exact root of unity of order dividing ord(g), extended to the whole
/// group by the homomorphism law. Returns nullopt otherwise. With
/// verify_all_elements the invariance equation is rechecked against the state
/// for every group element instead of only the generators.
std::optional<PhaseHom> extract_character(const StateVector& psi, const SubgroupPtr& G,
                                          bool verify_all_elements = false);

/// The expansion of a G-invariant state over generalized Dicke states: one
/// coefficient per supported orbit, taken at the orbit representative.
struct DickeDecomposition {
  PhaseHom character;
  std::vector<std::pair<BitString, std::complex<double>>> terms;  // reps descending
};

/// Throws NotInvariantError when psi is not G-invariant.
DickeDecomposition dicke_decompose(const StateVector& psi, const SubgroupPtr& G);

StateVector reconstruct(const DickeDecomposition& d);

/// Orthonormal basis of {psi : g.psi = t(g) psi for all g}, computed by the
/// character projector (1/|G|) sum_g t(g)^{-1} rho(g) evaluated orbit block
/// by orbit block with singular value cutoff 1e-10, then re-expressed as the
/// exact normalized Dicke states of the surviving orbits. Ordered by orbit
/// representative descending.
std::vector<StateVector> invariant_subspace(const SubgroupPtr& G, const PhaseHom& t);

}  // namespace permsym
