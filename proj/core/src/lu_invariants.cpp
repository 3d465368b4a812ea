#include "permsym/lu_invariants.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "permsym/errors.hpp"
#include "permsym/local_unitary.hpp"

namespace permsym {

Eigen::MatrixXcd reduced_density(const StateVector& psi, const std::vector<int>& kept_qubits) {
  const int n = psi.n();
  const int k = static_cast<int>(kept_qubits.size());
  if (k < 1 || k > n) throw InvalidInputError("block size must be in 1..n");
  if (!std::is_sorted(kept_qubits.begin(), kept_qubits.end()) ||
      std::adjacent_find(kept_qubits.begin(), kept_qubits.end()) != kept_qubits.end())
    throw InvalidInputError("kept qubit labels must be strictly ascending");
  for (int q : kept_qubits)
    if (q < 1 || q > n) throw InvalidInputError("qubit label out of range");

  std::vector<int> traced;
  for (int q = 1; q <= n; ++q)
    if (!std::binary_search(kept_qubits.begin(), kept_qubits.end(), q)) traced.push_back(q);

  // M(a, b) = psi[idx(a, b)], rho = M M^dagger.
  const Eigen::Index da = Eigen::Index{1} << k;
  const Eigen::Index db = Eigen::Index{1} << (n - k);
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(da, db);
  for (Eigen::Index idx = 0; idx < psi.dim(); ++idx) {
    Eigen::Index a = 0, b = 0;
    for (int q : kept_qubits) a = (a << 1) | ((idx >> (n - q)) & 1);
    for (int q : traced) b = (b << 1) | ((idx >> (n - q)) & 1);
    M(a, b) = psi.amps()(idx);
  }
  return M * M.adjoint();
}

std::vector<double> density_spectrum(const Eigen::MatrixXcd& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
  std::vector<double> spectrum(solver.eigenvalues().data(),
                               solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(spectrum.begin(), spectrum.end(), std::greater<>());
  return spectrum;
}

double entropy_base2(const std::vector<double>& spectrum) {
  double s = 0.0;
  for (double lambda : spectrum) {
    if (lambda > 1e-15) s -= lambda * std::log2(lambda);
  }
  return s;
}

namespace {

void enumerate_blocks(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> block(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) block[static_cast<std::size_t>(i)] = i + 1;
  for (;;) {
    // For the balanced case keep one block per bipartition, the one holding
    // qubit 1.
    if (2 * k != n || block.front() == 1) out.push_back(block);
    int i = k - 1;
    while (i >= 0 && block[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++block[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      block[static_cast<std::size_t>(j)] = block[static_cast<std::size_t>(j) - 1] + 1;
  }
}

}  // namespace

LuInvariantReport lu_invariants(const StateVector& psi, int block_size) {
  const int n = psi.n();
  if (block_size < 1 || 2 * block_size > n)
    throw InvalidInputError("block size must satisfy 1 <= block <= n/2");
  if (std::abs(psi.norm() - 1.0) > 1e-9)
    throw InvalidInputError("lu_invariants requires a normalized state");

  LuInvariantReport report;
  report.n = n;
  report.block_size = block_size;
  for (int q = 1; q <= n; ++q) {
    const auto spectrum = density_spectrum(reduced_density(psi, {q}));
    report.single_qubit_spectra.push_back({spectrum[0], spectrum[1]});
  }

  std::vector<std::vector<int>> blocks;
  enumerate_blocks(n, block_size, blocks);
  double entropy_sum = 0.0;
  for (const auto& block : blocks) {
    auto spectrum = density_spectrum(reduced_density(psi, block));
    entropy_sum += entropy_base2(spectrum);
    report.bipartite_spectra.emplace_back(block, std::move(spectrum));
  }
  report.avg_bipartite_entropy = entropy_sum / static_cast<double>(blocks.size());
  return report;
}

LuSearchEvidence random_local_search(const StateVector& source, const StateVector& target,
                                     std::uint64_t seed, int trials) {
  if (source.n() != target.n()) throw InvalidInputError("arity mismatch between states");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto haar2 = [&]() {
    Eigen::Matrix2cd g;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) g(r, c) = std::complex<double>(gauss(rng), gauss(rng));
    const Eigen::HouseholderQR<Eigen::Matrix2cd> qr(g);
    Eigen::Matrix2cd q = qr.householderQ();
    const Eigen::Matrix2cd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int c = 0; c < 2; ++c) {
      const std::complex<double> d = r(c, c);
      q.col(c) *= d / std::abs(d);
    }
    return q;
  };

  LuSearchEvidence evidence;
  evidence.trials = trials;
  for (int trial = 0; trial < trials; ++trial) {
    LocalUnitaryNQ ops;
    ops.reserve(static_cast<std::size_t>(source.n()));
    for (int q = 0; q < source.n(); ++q) ops.push_back(haar2());
    const double overlap = std::abs(inner(target, apply_local(ops, source)));
    evidence.best_overlap = std::max(evidence.best_overlap, overlap);
  }
  return evidence;
}

}  // namespace permsym
