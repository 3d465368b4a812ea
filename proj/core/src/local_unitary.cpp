#include "permsym/local_unitary.hpp"

#include <cmath>
#include <numbers>

#include "permsym/errors.hpp"
#include "permsym/phase.hpp"

namespace permsym {

namespace {

using std::numbers::pi;
const std::complex<double> kI{0.0, 1.0};
const std::complex<double> kOmega = PhaseFraction(1, 3).value();

}  // namespace

bool is_unitary(const LocalUnitary1Q& U, double tol) {
  return (U.adjoint() * U - Eigen::Matrix2cd::Identity()).norm() <= tol;
}

LocalUnitary1Q pauli_x() {
  LocalUnitary1Q m;
  m << 0, 1, 1, 0;
  return m;
}

LocalUnitary1Q pauli_y() {
  LocalUnitary1Q m;
  m << 0, -kI, kI, 0;
  return m;
}

LocalUnitary1Q pauli_z() {
  LocalUnitary1Q m;
  m << 1, 0, 0, -1;
  return m;
}

LocalUnitary1Q rotation_unitary(const Eigen::Vector3d& axis, double angle) {
  if (std::abs(axis.norm() - 1.0) > 1e-9) throw InvalidInputError("rotation axis must be unit length");
  const Eigen::Matrix2cd dir = axis.x() * pauli_x() + axis.y() * pauli_y() + axis.z() * pauli_z();
  return std::cos(angle / 2.0) * Eigen::Matrix2cd::Identity() - kI * std::sin(angle / 2.0) * dir;
}

Eigen::Vector3d bloch_image(const LocalUnitary1Q& U, const Eigen::Vector3d& v) {
  const Eigen::Matrix2cd m =
      U * (v.x() * pauli_x() + v.y() * pauli_y() + v.z() * pauli_z()) * U.adjoint();
  return {(m * pauli_x()).trace().real() / 2.0, (m * pauli_y()).trace().real() / 2.0,
          (m * pauli_z()).trace().real() / 2.0};
}

LocalUnitary1Q compose_north_to(const BlochPoint& P) {
  const double theta = P.theta;
  const double phi = P.phi;
  const LocalUnitary1Q first = rotation_unitary({0, 1, 0}, pi / 2.0);
  const LocalUnitary1Q second = rotation_unitary(
      {std::cos(pi / 2.0 - theta), std::sin(pi / 2.0 - theta), 0.0}, -pi / 2.0);
  const LocalUnitary1Q third = rotation_unitary({0, 0, 1}, phi - (pi / 2.0 - theta));
  return third * second * first;
}

namespace {

// Bloch coordinates of a|0> + b|1> with the global phase of a stripped.
void bloch_angles(std::complex<double> a, std::complex<double> b, double& theta, double& phi) {
  constexpr double eps = 1e-12;
  if (std::abs(a) < eps) {
    theta = pi;
    phi = std::arg(b);
  } else if (std::abs(b) < eps) {
    theta = 0.0;
    phi = 0.0;
  } else {
    const std::complex<double> gauge = a / std::abs(a);
    theta = 2.0 * std::atan2(std::abs(b), std::abs(a));
    phi = std::arg(b * std::conj(gauge));
  }
}

}  // namespace

LocalUnitary1Q m3_connector(std::complex<double> a, std::complex<double> b) {
  if (std::abs(std::norm(a) + std::norm(b) - 1.0) > 1e-12)
    throw InvalidInputError("m3_connector requires |a|^2 + |b|^2 = 1");
  double theta = 0.0, phi = 0.0;
  bloch_angles(a, b, theta, phi);
  const LocalUnitary1Q u1 =
      rotation_unitary({std::cos(pi / 6.0), std::sin(pi / 6.0), 0.0}, pi / 2.0);
  const LocalUnitary1Q u2 =
      rotation_unitary({std::cos(pi / 6.0 - theta), std::sin(pi / 6.0 - theta), 0.0}, -pi / 2.0);
  const LocalUnitary1Q u3 = rotation_unitary({0, 0, 1}, phi + theta - pi / 2.0);
  return u3 * u2 * u1;
}

LocalUnitaryNQ m3_conjugate_connector(std::complex<double> a, std::complex<double> b) {
  // W = I x diag(1,w) x diag(1,w^2) takes |M3(1,0)> to its conjugate
  // exactly; conjugating the (a,b)-connector then carries the conjugate
  // family along: conj(U)^{x3} conj(|M3(1,0)>) = conj(U^{x3} |M3(1,0)>).
  // Applying W first is essential here; with W last the beta component
  // lands in the symmetric subspace instead.
  const LocalUnitary1Q V = m3_connector(a, b).conjugate();
  LocalUnitary1Q w2 = LocalUnitary1Q::Identity();
  w2(1, 1) = kOmega;
  LocalUnitary1Q w3 = LocalUnitary1Q::Identity();
  w3(1, 1) = kOmega * kOmega;
  return {V, V * w2, V * w3};
}

Eigen::Matrix2cd induced_m3_action(const LocalUnitary1Q& U) {
  constexpr double tol = 1e-10;
  if (!is_unitary(U, tol)) throw InvalidInputError("operator is not unitary");

  // exp(-i u/2 Z): diagonal with determinant 1.
  if (std::abs(U(0, 1)) <= tol && std::abs(U(1, 0)) <= tol) {
    if (std::abs(U(0, 0) * U(1, 1) - 1.0) > tol)
      throw InvalidInputError("diagonal operator is not of the exp(-i u/2 Z) form");
    Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
    out(0, 0) = U(0, 0);
    out(1, 1) = U(1, 1);
    return out;
  }

  // exp(i pi/4 (alpha X + beta Y)) = (I + i(alpha X + beta Y))/sqrt(2):
  // both diagonal entries are exactly 1/sqrt(2).
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  if (std::abs(U(0, 0) - inv_sqrt2) <= tol && std::abs(U(1, 1) - inv_sqrt2) <= tol &&
      std::abs(std::abs(U(1, 0)) - inv_sqrt2) <= tol) {
    const double xi = std::arg(U(1, 0)) - pi / 2.0;
    Eigen::Matrix2cd expected;
    expected << 1.0, kI * std::exp(-kI * xi), kI * std::exp(kI * xi), 1.0;
    expected *= inv_sqrt2;
    if ((U - expected).norm() > 10 * tol)
      throw InvalidInputError("operator is not of the exp(i pi/4 (aX + bY)) form");
    const double eff_phi = xi + pi / 2.0;
    Eigen::Matrix2cd out;
    out << 1.0, kOmega * std::exp(-kI * eff_phi), -kOmega * kOmega * std::exp(kI * eff_phi), 1.0;
    out *= inv_sqrt2;
    return out;
  }
  throw InvalidInputError("operator is not of a supported rotation form");
}

StateVector apply_single(const LocalUnitary1Q& U, int qubit, const StateVector& psi) {
  const int n = psi.n();
  if (qubit < 1 || qubit > n) throw InvalidInputError("qubit label out of range");
  const int bit = n - qubit;  // qubit 1 is the most significant bit
  const Eigen::Index stride = Eigen::Index{1} << bit;
  StateVector out(n);
  for (Eigen::Index idx = 0; idx < psi.dim(); ++idx) {
    if (idx & stride) continue;
    const auto a0 = psi.amps()(idx);
    const auto a1 = psi.amps()(idx | stride);
    out.amps()(idx) = U(0, 0) * a0 + U(0, 1) * a1;
    out.amps()(idx | stride) = U(1, 0) * a0 + U(1, 1) * a1;
  }
  return out;
}

StateVector apply_local(const LocalUnitaryNQ& ops, const StateVector& psi) {
  if (static_cast<int>(ops.size()) != psi.n())
    throw InvalidInputError("one unitary factor per qubit required");
  StateVector out = psi;
  for (int k = 1; k <= psi.n(); ++k) out = apply_single(ops[static_cast<std::size_t>(k) - 1], k, out);
  return out;
}

}  // namespace permsym
