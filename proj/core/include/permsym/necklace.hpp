#pragma once

#include <array>
#include <optional>
#include <vector>

#include "permsym/dicke.hpp"
#include "permsym/orbit.hpp"
#include "permsym/state_vector.hpp"

namespace permsym {

/// Symmetry type of a necklace diagram (the C_n orbit of a bit string drawn
/// on a regular n-gon):
///   SP     some member is fixed by reversal (a palindromic string),
///   CP     n even, no SP witness, some member K has tau.K = eps.K,
///   Chiral reversal leaves the cyclic orbit entirely.
enum class NecklaceType { SP, CP, Chiral };

const char* to_string(NecklaceType type);

struct NecklaceClass {
  OrbitRecord orbit;  // under C_n
  NecklaceType type;
  int mirror_lines;  // L: dihedral reflections tau eps^k fixing the string
  int cycle_order;   // m: smallest k > 0 with eps^k.I = I; equals |orbit|
};

NecklaceClass classify_necklace(const BitString& I);

/// The exponents k in 0..n-1 with tau eps^k fixing I. For even cycle order
/// they are all even exactly when the class is SP and all odd exactly when
/// it is CP. Requires an even cycle order; throws for chiral classes (no
/// such k exists).
struct SpCpParityReport {
  NecklaceType type;
  std::vector<int> k_set;
  bool parity_ok;
};

SpCpParityReport check_sp_cp_parity(const BitString& I);

enum class ConditionVerdict { Pass, Fail, Vacuous };
const char* to_string(ConditionVerdict v);

/// Promotion check C_n -> D_n. Requires psi to be C_n-invariant (throws
/// NotInvariantError otherwise). The four conditions are:
///   (i)   t_eps = +-1
///   (ii)  a supported SP orbit forces s_tau = 1
///   (iii) a supported CP orbit forces s_tau = s_eps
///   (iv)  supported chiral orbits need c_J = s_tau c_{tau J} for all J
/// is_dn is their conjunction with s_tau chosen consistently.
struct DnPromotionReport {
  bool is_dn = false;
  std::optional<int> s_tau;  // +1 or -1 when determined
  std::array<ConditionVerdict, 4> conditions{};
};

DnPromotionReport check_dn_promotion(const StateVector& psi);

/// Promotion check D_n -> S_n. Requires psi to be D_n-invariant (throws
/// NotInvariantError otherwise). Conditions:
///   (i)  t_eps = t_tau = 1
///   (ii) representative coefficients agree across all D_n orbits of equal
///        weight
struct SnPromotionReport {
  bool is_sn = false;
  std::array<ConditionVerdict, 2> conditions{};
};

SnPromotionReport check_sn_promotion(const StateVector& psi);

}  // namespace permsym
