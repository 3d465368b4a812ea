#pragma once

#include <vector>

#include <Eigen/Dense>

#include "permsym/state_vector.hpp"

namespace permsym {

/// Real solution space of (i s Id + sum_k M_k^{(k)}) |psi> = 0 with s real
/// and M_k traceless anti-Hermitian. Coordinates are (s, x_1, y_1, z_1, ...,
/// x_n, y_n, z_n) with M_k = i (x_k X + y_k Y + z_k Z); the dimension of the
/// space is a local unitary invariant.
struct StabAlgebraResult {
  int dimension = 0;
  Eigen::MatrixXd basis;           // (3n+1) x dimension, orthonormal columns
  std::vector<double> residuals;   // ||(i s + sum M_k) psi|| per column
  double cutoff = 0.0;
};

/// Null-space computation with a relative singular value cutoff (default
/// 1e-8). Requires a normalized state with n <= 10.
StabAlgebraResult stab_algebra_dim(const StateVector& psi, double cutoff = 1e-8);

/// The operator (i s Id + sum_k M_k^{(k)}) psi for a coordinate vector; used
/// to check residuals and membership of claimed algebra elements.
Eigen::VectorXcd apply_stab_element(const Eigen::VectorXd& coords, const StateVector& psi);

}  // namespace permsym
