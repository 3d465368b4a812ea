#pragma once

#include <complex>
#include <optional>
#include <set>
#include <string>

#include <Eigen/Dense>
#include <nlohmann/json_fwd.hpp>

#include "permsym/bitstring.hpp"

namespace permsym {

/// Tolerances shared across the state-level operations.
inline constexpr double kSupportEps = 1e-12;       // below this an amplitude is structurally zero
inline constexpr double kPhaseOverlapTol = 1e-9;   // overlap defect allowed by equal_up_to_phase
inline constexpr double kPhaseResidualTol = 1e-8;  // residual norm allowed by equal_up_to_phase

/// A dense n-qubit state. Amplitudes are indexed by the bit string
/// I = i_1 i_2 ... i_n with qubit 1 most significant, so |0011> sits at
/// index 3 for n = 4. The convention is fixed and not configurable; the
/// file format records it as "bigendian-q1msb".
class StateVector {
 public:
  explicit StateVector(int n);  // zero vector
  StateVector(int n, Eigen::VectorXcd amplitudes);

  static StateVector basis_state(int n, std::uint64_t index);
  static StateVector basis_state(const BitString& I);

  int n() const { return n_; }
  Eigen::Index dim() const { return amps_.size(); }
  const Eigen::VectorXcd& amps() const { return amps_; }
  Eigen::VectorXcd& amps() { return amps_; }

  std::complex<double> amp(std::uint64_t index) const { return amps_(static_cast<Eigen::Index>(index)); }
  std::complex<double> amp(const BitString& I) const;
  void set_amp(std::uint64_t index, std::complex<double> value);

  double norm() const { return amps_.norm(); }
  /// Throws InvalidInputError when the norm is below kSupportEps.
  StateVector normalized() const;

 private:
  int n_;
  Eigen::VectorXcd amps_;
};

/// <a|b>.
std::complex<double> inner(const StateVector& a, const StateVector& b);

/// Permutation action on states: the coefficient of |g.I> in the output is
/// the coefficient of |I> in the input. Unitary, and a group action.
StateVector act_on_state(const Permutation& g, const StateVector& psi);

/// Returns lambda with psi = lambda * phi when |<phi|psi>| >= 1 - 1e-9 and
/// ||psi - lambda phi|| <= 1e-8, where lambda = <phi|psi>/|<phi|psi>|.
/// Returns nullopt otherwise. Throws on a (near-)zero input vector.
std::optional<std::complex<double>> equal_up_to_phase(const StateVector& psi, const StateVector& phi);

StateVector conj_state(const StateVector& psi);
StateVector tensor(const StateVector& psi, const StateVector& phi);

/// Hamming weights w such that some amplitude with wt I = w has modulus
/// >= kSupportEps.
std::set<int> weight_support(const StateVector& psi);

/// State file schema, bit-exact:
///   { "n": int, "convention": "bigendian-q1msb", "amplitudes": [[re, im], ...] }
nlohmann::json state_to_json(const StateVector& psi);
StateVector state_from_json(const nlohmann::json& j);
StateVector read_state_file(const std::string& path);
void write_state_file(const std::string& path, const StateVector& psi);

}  // namespace permsym
