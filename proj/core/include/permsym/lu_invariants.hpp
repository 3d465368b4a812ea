#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "permsym/state_vector.hpp"

namespace permsym {

/// Local-unitary-invariant diagnostics of a pure state: reduced density
/// spectra per qubit and per block, and the average bipartite von Neumann
/// entropy (base 2) over the listed bipartitions.
struct LuInvariantReport {
  int n = 0;
  int block_size = 0;
  std::vector<std::array<double, 2>> single_qubit_spectra;  // descending per qubit
  /// Kept qubit labels (1-based, ascending) with the block's eigenvalues
  /// descending. For block_size == n/2 only blocks containing qubit 1 are
  /// listed, one per bipartition.
  std::vector<std::pair<std::vector<int>, std::vector<double>>> bipartite_spectra;
  double avg_bipartite_entropy = 0.0;
};

/// Reduced density operator of the kept qubits (1-based labels, ascending;
/// the first label is the most significant bit of the block index).
Eigen::MatrixXcd reduced_density(const StateVector& psi, const std::vector<int>& kept_qubits);

std::vector<double> density_spectrum(const Eigen::MatrixXcd& rho);  // descending
double entropy_base2(const std::vector<double>& spectrum);

LuInvariantReport lu_invariants(const StateVector& psi, int block_size);

/// Best overlap |<target| U1x...xUn |source>| found by seeded random sampling
/// of product unitaries. Evidence only: certifying is always false, a low
/// best overlap proves nothing by itself.
struct LuSearchEvidence {
  double best_overlap = 0.0;
  int trials = 0;
  bool certifying = false;
};

LuSearchEvidence random_local_search(const StateVector& source, const StateVector& target,
                                     std::uint64_t seed, int trials);

}  // namespace permsym
