#include "permsym/gsym.hpp"

#include <cmath>
#include <numbers>

#include "permsym/errors.hpp"

namespace permsym {

namespace {

const std::complex<double> kOmega = PhaseFraction(1, 3).value();

void check_qubit_tuple(const QubitTuple& phis, int n) {
  if (static_cast<int>(phis.size()) != n)
    throw InvalidInputError("qubit tuple size must match the group arity");
  for (const auto& phi : phis)
    if (std::abs(phi.norm() - 1.0) > 1e-9)
      throw InvalidInputError("each 1-qubit state must be normalized");
}

bool coincide_up_to_phase(const QubitState& a, const QubitState& b) {
  return std::abs(std::abs(a.dot(b)) - 1.0) <= 1e-9;
}

}  // namespace

Eigen::Vector2cd BlochPoint::state() const {
  return {std::cos(theta / 2.0), std::polar(std::sin(theta / 2.0), phi)};
}

Eigen::Vector3d BlochPoint::unit_vector() const {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

StateVector gsym_unnormalized(const SubgroupPtr& G, const PhaseHom& t, const QubitTuple& phis) {
  if (!G) throw InvalidInputError("null group");
  if (t.group()->kind() != G->kind() || t.group()->n() != G->n())
    throw InvalidInputError("character belongs to a different group");
  const int n = G->n();
  check_qubit_tuple(phis, n);

  StateVector acc(n);
  Eigen::VectorXcd term(Eigen::Index{1} << n);
  for (std::size_t i = 0; i < G->order(); ++i) {
    const Permutation ginv = G->elements()[i].inverse();
    // Product state with position k holding phi_{g^{-1}(k)}, built MSB-first.
    term.setZero();
    term(0) = t.value_at(static_cast<int>(i)).inverse().value();
    Eigen::Index width = 1;
    for (int k = 1; k <= n; ++k) {
      const QubitState& q = phis[static_cast<std::size_t>(ginv(k)) - 1];
      for (Eigen::Index idx = width; idx-- > 0;) {
        const std::complex<double> base = term(idx);
        term(2 * idx) = base * q(0);
        term(2 * idx + 1) = base * q(1);
      }
      width *= 2;
    }
    acc.amps() += term;
  }
  return acc;
}

std::optional<StateVector> gsym(const SubgroupPtr& G, const PhaseHom& t, const QubitTuple& phis) {
  const StateVector raw = gsym_unnormalized(G, t, phis);
  const double nrm = raw.norm();
  if (nrm < kGsymZeroEps) return std::nullopt;
  return StateVector(raw.n(), raw.amps() / nrm);
}

StateVector m3_alpha() {
  StateVector psi(3);
  const double s = 1.0 / std::sqrt(3.0);
  psi.set_amp(0b100, s);
  psi.set_amp(0b010, s * kOmega);
  psi.set_amp(0b001, s * kOmega * kOmega);
  return psi;
}

StateVector m3_beta() {
  StateVector psi(3);
  const double s = 1.0 / std::sqrt(3.0);
  psi.set_amp(0b110, s);
  psi.set_amp(0b011, s * kOmega);
  psi.set_amp(0b101, s * kOmega * kOmega);
  return psi;
}

StateVector make_m3(std::complex<double> a, std::complex<double> b) {
  if (std::abs(std::norm(a) + std::norm(b) - 1.0) > 1e-12)
    throw InvalidInputError("make_m3 requires |a|^2 + |b|^2 = 1");
  return {3, a * m3_alpha().amps() + b * m3_beta().amps()};
}

StateVector make_m4() {
  StateVector psi(4);
  const double s = 1.0 / std::sqrt(6.0);
  psi.set_amp(0b0011, s);
  psi.set_amp(0b1100, s);
  psi.set_amp(0b1010, s * kOmega);
  psi.set_amp(0b0101, s * kOmega);
  psi.set_amp(0b1001, s * kOmega * kOmega);
  psi.set_amp(0b0110, s * kOmega * kOmega);
  return psi;
}

bool a3_degenerate(const QubitTuple& phis) {
  check_qubit_tuple(phis, 3);
  return coincide_up_to_phase(phis[0], phis[1]) && coincide_up_to_phase(phis[0], phis[2]) &&
         coincide_up_to_phase(phis[1], phis[2]);
}

bool a4_degenerate(const QubitTuple& phis) {
  check_qubit_tuple(phis, 4);
  for (int skip = 0; skip < 4; ++skip) {
    QubitTuple triple;
    for (int i = 0; i < 4; ++i)
      if (i != skip) triple.push_back(phis[static_cast<std::size_t>(i)]);
    if (coincide_up_to_phase(triple[0], triple[1]) && coincide_up_to_phase(triple[0], triple[2]) &&
        coincide_up_to_phase(triple[1], triple[2]))
      return true;
  }
  return false;
}

double a4_symmetrization_residual(const PhaseHom& t, const QubitTuple& phis) {
  check_qubit_tuple(phis, 4);
  if (t.group()->kind() != GroupKind::A || t.group()->n() != 4)
    throw InvalidInputError("residual is defined for A_4 characters");
  const std::complex<double> t123 = t.evaluate(parse_cycles("(123)", 4)).value();
  if (std::abs(t123 - 1.0) < 1e-12)
    throw InvalidInputError("residual is defined for nontrivial characters only");

  // Unitary sending phi_1 to |0>.
  Eigen::Matrix2cd U;
  U << std::conj(phis[0](0)), std::conj(phis[0](1)), -phis[0](1), phis[0](0);
  const QubitState p2 = U * phis[1];
  const QubitState p3 = U * phis[2];
  const QubitState p4 = U * phis[3];
  const std::complex<double> a = p2(0), b = p2(1);
  const std::complex<double> c = p3(0), d = p3(1);
  const std::complex<double> e = p4(0), f = p4(1);
  return std::abs(a * d * f + t123 * b * d * e + t123 * t123 * b * c * f);
}

}  // namespace permsym
