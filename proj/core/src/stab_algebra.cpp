#include "permsym/stab_algebra.hpp"

#include "permsym/errors.hpp"
#include "permsym/local_unitary.hpp"

namespace permsym {

namespace {

// Columns of the complex system matrix: i psi, then i X_k psi, i Y_k psi,
// i Z_k psi for each qubit k.
Eigen::MatrixXcd system_matrix(const StateVector& psi) {
  const int n = psi.n();
  const Eigen::Index dim = psi.dim();
  Eigen::MatrixXcd A(dim, 3 * n + 1);
  const std::complex<double> i{0.0, 1.0};
  A.col(0) = i * psi.amps();
  const LocalUnitary1Q paulis[3] = {pauli_x(), pauli_y(), pauli_z()};
  for (int k = 1; k <= n; ++k)
    for (int p = 0; p < 3; ++p)
      A.col(1 + 3 * (k - 1) + p) = i * apply_single(paulis[p], k, psi).amps();
  return A;
}

}  // namespace

Eigen::VectorXcd apply_stab_element(const Eigen::VectorXd& coords, const StateVector& psi) {
  const int n = psi.n();
  if (coords.size() != 3 * n + 1) throw InvalidInputError("coordinate vector must have length 3n+1");
  return system_matrix(psi) * coords.cast<std::complex<double>>();
}

StabAlgebraResult stab_algebra_dim(const StateVector& psi, double cutoff) {
  const int n = psi.n();
  if (n > 10) throw CapExceededError("stab_algebra_dim supports n <= 10");
  if (std::abs(psi.norm() - 1.0) > 1e-9)
    throw InvalidInputError("stab_algebra_dim requires a normalized state");

  const Eigen::MatrixXcd A = system_matrix(psi);
  Eigen::MatrixXd real_system(2 * A.rows(), A.cols());
  real_system << A.real(), A.imag();

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(real_system, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double top = sv.size() > 0 ? sv(0) : 0.0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff * top) ++rank;

  StabAlgebraResult result;
  result.cutoff = cutoff;
  result.dimension = static_cast<int>(A.cols()) - rank;
  result.basis = svd.matrixV().rightCols(result.dimension);
  result.residuals.reserve(static_cast<std::size_t>(result.dimension));
  for (int c = 0; c < result.dimension; ++c)
    result.residuals.push_back((real_system * result.basis.col(c)).norm());
  return result;
}

}  // namespace permsym
