#include "permsym/necklace.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "permsym/errors.hpp"

namespace permsym {

namespace {
constexpr double kCoeffTol = 1e-10;
}

const char* to_string(NecklaceType type) {
  switch (type) {
    case NecklaceType::SP: return "SP";
    case NecklaceType::CP: return "CP";
    case NecklaceType::Chiral: return "chiral";
  }
  return "?";
}

const char* to_string(ConditionVerdict v) {
  switch (v) {
    case ConditionVerdict::Pass: return "pass";
    case ConditionVerdict::Fail: return "fail";
    case ConditionVerdict::Vacuous: return "vacuous";
  }
  return "?";
}

NecklaceClass classify_necklace(const BitString& I) {
  const int n = I.n();
  const SubgroupPtr Cn = make_subgroup(GroupKind::C, n);
  OrbitRecord orbit = orbit_of(Cn, I);
  const int m = static_cast<int>(orbit.members.size());

  const Permutation eps = full_cycle(n);
  const Permutation tau = mirror_reversal(n);

  // L counts the dihedral reflections tau eps^k that fix the string.
  int mirror_lines = 0;
  {
    BitString shifted = I;
    for (int k = 0; k < n; ++k) {
      if (act_on_bits(tau, shifted) == I) ++mirror_lines;
      shifted = act_on_bits(eps, shifted);
    }
  }

  bool sp = false;
  bool cp = false;
  for (const auto& K : orbit.members) {
    const BitString rev = act_on_bits(tau, K);
    if (rev == K) sp = true;
    if (rev == act_on_bits(eps, K)) cp = true;
  }
  NecklaceType type = NecklaceType::Chiral;
  if (sp)
    type = NecklaceType::SP;
  else if (n % 2 == 0 && cp)
    type = NecklaceType::CP;
  else if (cp)
    throw std::logic_error("odd-length necklace with a CP witness but no SP witness");

  if (type == NecklaceType::Chiral && orbit.contains(act_on_bits(tau, I)))
    throw std::logic_error("reversal stayed in the cyclic orbit of a chiral necklace");

  return {std::move(orbit), type, mirror_lines, m};
}

SpCpParityReport check_sp_cp_parity(const BitString& I) {
  const NecklaceClass nc = classify_necklace(I);
  if (nc.cycle_order % 2 != 0)
    throw InvalidInputError("parity check requires an even cycle order");
  if (nc.type == NecklaceType::Chiral)
    throw InvalidInputError("parity check is not applicable to chiral classes: no reflection fixes the string");

  const int n = I.n();
  const Permutation eps = full_cycle(n);
  const Permutation tau = mirror_reversal(n);
  SpCpParityReport report{nc.type, {}, true};
  BitString shifted = I;
  for (int k = 0; k < n; ++k) {
    if (act_on_bits(tau, shifted) == I) report.k_set.push_back(k);
    shifted = act_on_bits(eps, shifted);
  }
  for (int k : report.k_set) {
    const bool even = k % 2 == 0;
    if ((nc.type == NecklaceType::SP && !even) || (nc.type == NecklaceType::CP && even))
      report.parity_ok = false;
  }
  return report;
}

DnPromotionReport check_dn_promotion(const StateVector& psi) {
  const int n = psi.n();
  const SubgroupPtr Cn = make_subgroup(GroupKind::C, n);
  const auto t = extract_character(psi, Cn);
  if (!t) throw NotInvariantError("state is not C_n-invariant");

  DnPromotionReport report;
  const PhaseFraction t_eps = t->evaluate(full_cycle(n));
  const bool eps_real = t_eps.is_one() || t_eps == PhaseFraction::minus_one();
  report.conditions[0] = eps_real ? ConditionVerdict::Pass : ConditionVerdict::Fail;
  const int s_eps = t_eps.is_one() ? 1 : (t_eps == PhaseFraction::minus_one() ? -1 : 0);

  // Partition the supported orbits by necklace type.
  std::vector<OrbitRecord> chiral_supported;
  bool sp_supported = false;
  bool cp_supported = false;
  for (auto& orb : all_orbits(Cn)) {
    if (std::abs(psi.amp(orb.representative)) < kSupportEps) continue;
    switch (classify_necklace(orb.representative).type) {
      case NecklaceType::SP: sp_supported = true; break;
      case NecklaceType::CP: cp_supported = true; break;
      case NecklaceType::Chiral: chiral_supported.push_back(std::move(orb)); break;
    }
  }

  report.conditions[1] = ConditionVerdict::Vacuous;
  report.conditions[2] = ConditionVerdict::Vacuous;
  report.conditions[3] = ConditionVerdict::Vacuous;

  if (sp_supported) {
    report.s_tau = 1;
    report.conditions[1] = ConditionVerdict::Pass;
  }
  if (cp_supported) {
    if (s_eps == 0 || (report.s_tau && *report.s_tau != s_eps)) {
      report.conditions[2] = ConditionVerdict::Fail;
    } else {
      report.s_tau = s_eps;
      report.conditions[2] = ConditionVerdict::Pass;
    }
  }

  const Permutation tau = mirror_reversal(n);
  auto chiral_ok = [&](int s) {
    for (const auto& orb : chiral_supported)
      for (const auto& J : orb.members) {
        const std::complex<double> lhs = psi.amp(J);
        const std::complex<double> rhs =
            static_cast<double>(s) * psi.amp(act_on_bits(tau, J));
        if (std::abs(lhs - rhs) > kCoeffTol) return false;
      }
    return true;
  };
  if (!chiral_supported.empty()) {
    if (report.s_tau) {
      report.conditions[3] = chiral_ok(*report.s_tau) ? ConditionVerdict::Pass : ConditionVerdict::Fail;
    } else if (chiral_ok(1)) {
      report.s_tau = 1;
      report.conditions[3] = ConditionVerdict::Pass;
    } else if (chiral_ok(-1)) {
      report.s_tau = -1;
      report.conditions[3] = ConditionVerdict::Pass;
    } else {
      report.conditions[3] = ConditionVerdict::Fail;
    }
  }

  report.is_dn = report.conditions[0] == ConditionVerdict::Pass &&
                 report.conditions[1] != ConditionVerdict::Fail &&
                 report.conditions[2] != ConditionVerdict::Fail &&
                 report.conditions[3] != ConditionVerdict::Fail;
  return report;
}

SnPromotionReport check_sn_promotion(const StateVector& psi) {
  const int n = psi.n();
  const SubgroupPtr Dn = make_subgroup(GroupKind::D, n);
  const auto t = extract_character(psi, Dn);
  if (!t) throw NotInvariantError("state is not D_n-invariant");

  SnPromotionReport report;
  const bool trivial_on_gens =
      t->evaluate(full_cycle(n)).is_one() && t->evaluate(mirror_reversal(n)).is_one();
  report.conditions[0] = trivial_on_gens ? ConditionVerdict::Pass : ConditionVerdict::Fail;

  std::map<int, std::vector<std::complex<double>>> by_weight;
  for (const auto& orb : all_orbits(Dn))
    by_weight[orb.representative.weight()].push_back(psi.amp(orb.representative));
  bool equal = true;
  for (const auto& [w, coeffs] : by_weight)
    for (const auto& c : coeffs)
      if (std::abs(c - coeffs.front()) > kCoeffTol) equal = false;
  report.conditions[1] = equal ? ConditionVerdict::Pass : ConditionVerdict::Fail;

  report.is_sn = report.conditions[0] == ConditionVerdict::Pass &&
                 report.conditions[1] == ConditionVerdict::Pass;
  return report;
}

}  // namespace permsym
