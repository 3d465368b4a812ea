#include "permsym/state_vector.hpp"

#include <bit>
#include <fstream>

#include <nlohmann/json.hpp>

#include "permsym/errors.hpp"

namespace permsym {

namespace {
constexpr char kConvention[] = "bigendian-q1msb";
}

StateVector::StateVector(int n) : n_(n) {
  if (n < 1 || n > 24) throw InvalidInputError("qubit count must be in 1..24");
  amps_ = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
}

StateVector::StateVector(int n, Eigen::VectorXcd amplitudes) : n_(n), amps_(std::move(amplitudes)) {
  if (n < 1 || n > 24) throw InvalidInputError("qubit count must be in 1..24");
  if (amps_.size() != (Eigen::Index{1} << n))
    throw InvalidInputError("amplitude vector must have length 2^n");
}

StateVector StateVector::basis_state(int n, std::uint64_t index) {
  StateVector psi(n);
  psi.amps_(static_cast<Eigen::Index>(index)) = 1.0;
  return psi;
}

StateVector StateVector::basis_state(const BitString& I) { return basis_state(I.n(), I.index()); }

std::complex<double> StateVector::amp(const BitString& I) const {
  if (I.n() != n_) throw InvalidInputError("arity mismatch between state and bit string");
  return amps_(static_cast<Eigen::Index>(I.index()));
}

void StateVector::set_amp(std::uint64_t index, std::complex<double> value) {
  amps_(static_cast<Eigen::Index>(index)) = value;
}

StateVector StateVector::normalized() const {
  const double nrm = norm();
  if (nrm < kSupportEps) throw InvalidInputError("cannot normalize a zero vector");
  return {n_, amps_ / nrm};
}

std::complex<double> inner(const StateVector& a, const StateVector& b) {
  if (a.n() != b.n()) throw InvalidInputError("arity mismatch between states");
  return a.amps().dot(b.amps());
}

StateVector act_on_state(const Permutation& g, const StateVector& psi) {
  if (g.n() != psi.n()) throw InvalidInputError("arity mismatch between permutation and state");
  StateVector out(psi.n());
  const auto dim = psi.dim();
  for (Eigen::Index idx = 0; idx < dim; ++idx) {
    const auto moved = act_on_index(g, static_cast<std::uint64_t>(idx));
    out.amps()(static_cast<Eigen::Index>(moved)) = psi.amps()(idx);
  }
  return out;
}

std::optional<std::complex<double>> equal_up_to_phase(const StateVector& psi, const StateVector& phi) {
  if (psi.n() != phi.n()) throw InvalidInputError("arity mismatch between states");
  if (psi.norm() < kSupportEps || phi.norm() < kSupportEps)
    throw InvalidInputError("equal_up_to_phase requires nonzero states");
  const std::complex<double> overlap = inner(phi, psi);
  const double mag = std::abs(overlap);
  if (mag < 1.0 - kPhaseOverlapTol) return std::nullopt;
  const std::complex<double> lambda = overlap / mag;
  if ((psi.amps() - lambda * phi.amps()).norm() > kPhaseResidualTol) return std::nullopt;
  return lambda;
}

StateVector conj_state(const StateVector& psi) { return {psi.n(), psi.amps().conjugate()}; }

StateVector tensor(const StateVector& psi, const StateVector& phi) {
  StateVector out(psi.n() + phi.n());
  const auto dpsi = psi.dim();
  const auto dphi = phi.dim();
  for (Eigen::Index i = 0; i < dpsi; ++i)
    for (Eigen::Index j = 0; j < dphi; ++j)
      out.amps()(i * dphi + j) = psi.amps()(i) * phi.amps()(j);
  return out;
}

std::set<int> weight_support(const StateVector& psi) {
  std::set<int> weights;
  for (Eigen::Index idx = 0; idx < psi.dim(); ++idx) {
    if (std::abs(psi.amps()(idx)) >= kSupportEps)
      weights.insert(static_cast<int>(std::popcount(static_cast<std::uint64_t>(idx))));
  }
  return weights;
}

nlohmann::json state_to_json(const StateVector& psi) {
  nlohmann::json amps = nlohmann::json::array();
  for (Eigen::Index idx = 0; idx < psi.dim(); ++idx) {
    const auto a = psi.amps()(idx);
    amps.push_back({a.real(), a.imag()});
  }
  return {{"n", psi.n()}, {"convention", kConvention}, {"amplitudes", amps}};
}

StateVector state_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("convention") || !j.contains("amplitudes"))
    throw InvalidInputError("state file must hold {n, convention, amplitudes}");
  if (j.at("convention").get<std::string>() != kConvention)
    throw InvalidInputError("state file convention must be \"bigendian-q1msb\"");
  const int n = j.at("n").get<int>();
  if (n < 1 || n > 24) throw InvalidInputError("qubit count must be in 1..24");
  const auto& amps = j.at("amplitudes");
  if (amps.size() != (std::size_t{1} << n))
    throw InvalidInputError("amplitude list must have length 2^n");
  StateVector psi(n);
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const auto& entry = amps[i];
    if (!entry.is_array() || entry.size() != 2)
      throw InvalidInputError("each amplitude must be a [re, im] pair");
    psi.set_amp(i, {entry[0].get<double>(), entry[1].get<double>()});
  }
  return psi;
}

StateVector read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot open state file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInputError(std::string("malformed state file: ") + e.what());
  }
  return state_from_json(j);
}

void write_state_file(const std::string& path, const StateVector& psi) {
  std::ofstream out(path);
  if (!out) throw InvalidInputError("cannot open state file for writing: " + path);
  out << state_to_json(psi).dump(2) << '\n';
}

}  // namespace permsym
