#pragma once

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "permsym/character.hpp"
#include "permsym/state_vector.hpp"

namespace permsym {

/// Threshold on the unnormalized symmetrization norm below which the result
/// counts as the zero vector. Inputs are unit vectors and |G| is small at
/// desk scale, so genuine zeros sit many orders below this.
inline constexpr double kGsymZeroEps = 1e-10;

/// Point on the Bloch sphere in spherical coordinates; maps to the qubit
/// state cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
struct BlochPoint {
  double theta = 0.0;  // polar angle in [0, pi]
  double phi = 0.0;    // azimuth in [0, 2 pi)

  Eigen::Vector2cd state() const;
  Eigen::Vector3d unit_vector() const;  // (sin t cos p, sin t sin p, cos t)
};

using QubitState = Eigen::Vector2cd;
using QubitTuple = std::vector<QubitState>;

/// The raw sum K-less G-symmetrization sum_{sigma in G} t(sigma)^{-1}
/// |phi_{sigma^{-1}(1)}> ... |phi_{sigma^{-1}(n)}>.
StateVector gsym_unnormalized(const SubgroupPtr& G, const PhaseHom& t, const QubitTuple& phis);

/// Normalized G-symmetrization, or nullopt when the sum is the zero vector
/// (norm below kGsymZeroEps). When present the output satisfies
/// sigma.psi = t(sigma) psi for all sigma in G.
std::optional<StateVector> gsym(const SubgroupPtr& G, const PhaseHom& t, const QubitTuple& phis);

StateVector m3_alpha();
StateVector m3_beta();

/// a|alpha> + b|beta>; requires |a|^2 + |b|^2 = 1 within 1e-12.
StateVector make_m3(std::complex<double> a, std::complex<double> b);

/// The 4-qubit state with the six weight-2 amplitudes
/// (|0011>+|1100>) + w(|1010>+|0101>) + w^2(|1001>+|0110>) over sqrt(6).
StateVector make_m4();

/// True iff all three states coincide up to phase.
bool a3_degenerate(const QubitTuple& phis);
/// True iff some three of the four states coincide up to phase.
bool a4_degenerate(const QubitTuple& phis);

/// |adf + t_(123) bde + t_(123)^2 bcf| after rotating phi_1 to |0> and
/// reading (a,b), (c,d), (e,f) off the rotated phi_2, phi_3, phi_4. The
/// 4-qubit symmetrization over A_4 with the nontrivial character t vanishes
/// exactly on the zero set of this polynomial.
double a4_symmetrization_residual(const PhaseHom& t, const QubitTuple& phis);

}  // namespace permsym
