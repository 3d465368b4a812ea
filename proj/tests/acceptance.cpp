// Acceptance suite: runs every advertised guarantee end to end and prints
// one PASS/FAIL line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "permsym/dicke.hpp"
#include "permsym/gsym.hpp"
#include "permsym/local_unitary.hpp"
#include "permsym/lu_invariants.hpp"
#include "permsym/necklace.hpp"
#include "permsym/stab_algebra.hpp"
#include "test_helpers.hpp"

using namespace permsym;
using permsym::testing::char_with_123;
using permsym::testing::char_with_eps;
using permsym::testing::ghz;
using permsym::testing::random_invariant_state;
using permsym::testing::random_qubit;
using cd = std::complex<double>;

namespace {

struct Checker {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << (detail.tellp() > 0 ? "; " : "") << what;
    }
  }
};

std::pair<cd, cd> random_ab(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  cd a{gauss(rng), gauss(rng)}, b{gauss(rng), gauss(rng)};
  const double nrm = std::sqrt(std::norm(a) + std::norm(b));
  return {a / nrm, b / nrm};
}

void criterion_1_table1(Checker& c) {
  const auto A4 = make_subgroup(GroupKind::A, 4);
  const auto t = extract_character(make_m4(), A4, /*verify_all_elements=*/true);
  c.require(t.has_value(), "M4 must be A4-invariant");
  if (!t) return;
  const std::vector<std::pair<std::string, PhaseFraction>> table = {
      {"e", PhaseFraction::one()},        {"(12)(34)", PhaseFraction::one()},
      {"(13)(24)", PhaseFraction::one()}, {"(14)(23)", PhaseFraction::one()},
      {"(123)", PhaseFraction(1, 3)},     {"(132)", PhaseFraction(2, 3)},
      {"(124)", PhaseFraction(2, 3)},     {"(142)", PhaseFraction(1, 3)},
      {"(234)", PhaseFraction(2, 3)},     {"(243)", PhaseFraction(1, 3)},
      {"(134)", PhaseFraction(1, 3)},     {"(143)", PhaseFraction(2, 3)}};
  for (const auto& [sigma, value] : table)
    c.require(t->evaluate(parse_cycles(sigma, 4)) == value, "t(" + sigma + ") != " + value.str());
}

void criterion_2_singlet(Checker& c) {
  for (int n : {3, 4, 5}) {
    const auto Sn = make_subgroup(GroupKind::S, n);
    const auto sign = dual_group(Sn)[1];
    c.require(invariant_subspace(Sn, sign).empty(),
              "sign-character subspace must be empty for n=" + std::to_string(n));
  }
  const auto S2 = make_subgroup(GroupKind::S, 2);
  const auto basis = invariant_subspace(S2, dual_group(S2)[1]);
  c.require(basis.size() == 1, "sign-character subspace must be 1-dimensional for n=2");
  if (basis.size() == 1) {
    StateVector singlet(2);
    singlet.set_amp(0b01, 1.0 / std::sqrt(2.0));
    singlet.set_amp(0b10, -1.0 / std::sqrt(2.0));
    c.require(equal_up_to_phase(basis[0], singlet).has_value(), "basis must be the singlet");
  }
}

void criterion_3_an_trivial(Checker& c) {
  const std::vector<std::size_t> expected = {3, 3, 1, 1};
  for (int n = 3; n <= 6; ++n) {
    const auto An = make_subgroup(GroupKind::A, n);
    const auto chars = dual_group(An);
    c.require(chars.size() == expected[static_cast<std::size_t>(n - 3)],
              "dual(A_" + std::to_string(n) + ") order");
    const auto Sn = make_subgroup(GroupKind::S, n);
    const auto a_basis = invariant_subspace(An, chars[0]);
    const auto s_basis = invariant_subspace(Sn, dual_group(Sn)[0]);
    c.require(a_basis.size() == s_basis.size(), "subspace dimensions must agree");
    if (a_basis.size() != s_basis.size()) continue;
    auto residual = [](const StateVector& v, const std::vector<StateVector>& basis) {
      Eigen::VectorXcd rem = v.amps();
      for (const auto& b : basis) rem -= inner(b, v) * b.amps();
      return rem.norm();
    };
    for (const auto& v : a_basis)
      c.require(residual(v, s_basis) < 1e-10, "A_n-trivial vector escapes the symmetric subspace");
    for (const auto& v : s_basis)
      c.require(residual(v, a_basis) < 1e-10, "symmetric vector escapes the A_n-trivial subspace");
  }
}

void criterion_4_m3_m4_subspaces(Checker& c) {
  const auto A3 = make_subgroup(GroupKind::A, 3);
  for (const auto& t : dual_group(A3)) {
    if (t.is_trivial()) continue;
    const auto basis = invariant_subspace(A3, t);
    c.require(basis.size() == 2, "nontrivial A3 subspace must be 2-dimensional");
    if (basis.size() != 2) continue;
    const bool conj_family = t.evaluate(full_cycle(3)) == PhaseFraction(1, 3);
    const StateVector a = conj_family ? conj_state(m3_alpha()) : m3_alpha();
    const StateVector b = conj_family ? conj_state(m3_beta()) : m3_beta();
    for (const auto& v : {a, b}) {
      Eigen::VectorXcd rem = v.amps();
      for (const auto& e : basis) rem -= inner(e, v) * e.amps();
      c.require(rem.norm() < 1e-10, "alpha/beta span mismatch");
    }
  }
  const auto A4 = make_subgroup(GroupKind::A, 4);
  for (const auto& t : dual_group(A4)) {
    if (t.is_trivial()) continue;
    const auto basis = invariant_subspace(A4, t);
    c.require(basis.size() == 1, "nontrivial A4 subspace must be 1-dimensional");
    if (basis.size() != 1) continue;
    const double overlap = std::max(std::abs(inner(make_m4(), basis[0])),
                                    std::abs(inner(conj_state(make_m4()), basis[0])));
    c.require(overlap >= 1.0 - 1e-10, "basis must be M4 or its conjugate");
  }
}

void criterion_5_theorem1(Checker& c) {
  std::mt19937_64 rng(20240501);
  for (int trial = 0; trial < 100; ++trial) {
    const auto [a, b] = random_ab(rng);
    const LocalUnitary1Q U = m3_connector(a, b);
    const double overlap =
        std::abs(inner(make_m3(a, b), apply_local(LocalUnitaryNQ(3, U), make_m3(1, 0))));
    c.require(overlap >= 1.0 - 1e-9, "connector overlap below bound");
    const auto conj_ops = m3_conjugate_connector(a, b);
    const double conj_overlap =
        std::abs(inner(conj_state(make_m3(a, b)), apply_local(conj_ops, make_m3(1, 0))));
    c.require(conj_overlap >= 1.0 - 1e-9, "conjugate connector overlap below bound");
  }
}

void criterion_6_induced_action(Checker& c) {
  std::mt19937_64 rng(20240506);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
  auto direct = [&](const LocalUnitary1Q& U) {
    Eigen::Matrix2cd out;
    const LocalUnitaryNQ ops{U, U, U};
    for (int col = 0; col < 2; ++col) {
      const StateVector img = apply_local(ops, col == 0 ? make_m3(1, 0) : make_m3(0, 1));
      out(0, col) = std::sqrt(3.0) * img.amp(std::uint64_t{0b100});
      out(1, col) = std::sqrt(3.0) * img.amp(std::uint64_t{0b110});
    }
    return out;
  };
  for (int trial = 0; trial < 50; ++trial) {
    LocalUnitary1Q U;
    if (trial % 2 == 0) {
      const double xi = angle(rng);
      U = rotation_unitary({std::cos(xi), std::sin(xi), 0.0}, -3.14159265358979323846 / 2.0);
    } else {
      U = rotation_unitary({0, 0, 1}, angle(rng));
    }
    c.require((induced_m3_action(U) - direct(U)).norm() <= 1e-10, "induced action mismatch");
  }
}

void criterion_7_theorem2(Checker& c) {
  std::mt19937_64 rng(20240507);
  for (int n = 3; n <= 8; ++n) {
    const auto Cn = make_subgroup(GroupKind::C, n);
    const auto chars = dual_group(Cn);
    const auto orbits = all_orbits(Cn);
    const Permutation tau = mirror_reversal(n);
    int done = 0, agreements = 0;
    while (done < 200) {
      const auto& t = chars[rng() % chars.size()];
      StateVector psi = permsym::testing::random_invariant_state_from(orbits, t, rng);
      if (psi.norm() < 0.5) continue;
      // mirror-symmetrize some samples so both verdicts occur
      if (rng() % 3 == 0) {
        StateVector sym(n, psi.amps() + act_on_state(tau, psi).amps());
        if (sym.norm() < 0.5) continue;
        const auto t_check = extract_character(sym.normalized(), Cn);
        if (!t_check) continue;
        psi = sym.normalized();
      }
      ++done;
      const bool direct = equal_up_to_phase(act_on_state(tau, psi), psi).has_value();
      if (check_dn_promotion(psi).is_dn == direct) ++agreements;
    }
    c.require(agreements == 200,
              "n=" + std::to_string(n) + ": " + std::to_string(agreements) + "/200 agreements");
  }
}

void criterion_8_necklace_exhaustive(Checker& c) {
  for (int n = 1; n <= 12; ++n) {
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << n); ++idx) {
      const BitString I = BitString::from_index(n, idx);
      const auto nc = classify_necklace(I);
      const bool order_ok = nc.mirror_lines == 0 ? nc.cycle_order == n
                                                 : nc.cycle_order == n / nc.mirror_lines;
      if (!order_ok) {
        c.require(false, "cycle order / mirror line relation fails at " + I.str() + " (L=" +
                             std::to_string(nc.mirror_lines) + ", cycle order " +
                             std::to_string(nc.cycle_order) + ", n=" + std::to_string(n) + ")");
        return;
      }
      if (nc.cycle_order % 2 == 0 && nc.type != NecklaceType::Chiral) {
        const auto report = check_sp_cp_parity(I);
        if (!report.parity_ok || report.k_set.empty()) {
          c.require(false, "reflection parity fails at " + I.str());
          return;
        }
      }
    }
  }
}

void criterion_9_sn_promotion(Checker& c) {
  std::mt19937_64 rng(20240509);
  for (int n = 3; n <= 8; ++n) {
    const auto Dn = make_subgroup(GroupKind::D, n);
    const auto Sn = make_subgroup(GroupKind::S, n);
    const auto chars = dual_group(Dn);
    const auto dn_orbits = all_orbits(Dn);
    const auto sn_orbits = all_orbits(Sn);
    const auto sn_trivial = dual_group(Sn)[0];
    int done = 0, agreements = 0;
    while (done < 200) {
      StateVector psi(n);
      if (rng() % 3 == 0) {
        psi = permsym::testing::random_invariant_state_from(sn_orbits, sn_trivial, rng);
      } else {
        psi = permsym::testing::random_invariant_state_from(dn_orbits, chars[rng() % chars.size()], rng);
      }
      if (psi.norm() < 0.5) continue;
      ++done;
      const bool direct = extract_character(psi, Sn).has_value();
      if (check_sn_promotion(psi).is_sn == direct) ++agreements;
    }
    c.require(agreements == 200,
              "n=" + std::to_string(n) + ": " + std::to_string(agreements) + "/200 agreements");
  }
}

void criterion_10_stab_dims(Checker& c) {
  auto check_result = [&](const StateVector& psi, int expected, const std::string& label) {
    const auto result = stab_algebra_dim(psi);
    c.require(result.dimension == expected,
              label + ": dimension " + std::to_string(result.dimension) + " != " +
                  std::to_string(expected));
    for (double r : result.residuals) c.require(r <= 1e-8, label + ": residual above 1e-8");
  };
  check_result(make_m4(), 3, "M4");
  check_result(ghz(4), 3, "GHZ4");
  for (int n = 2; n <= 6; ++n) {
    check_result(StateVector::basis_state(n, 0), n, "|0...0> n=" + std::to_string(n));
    const auto Sn = make_subgroup(GroupKind::S, n);
    const auto trivial = dual_group(Sn)[0];
    for (int w = 1; w < n; ++w) {
      BitString I(n);
      for (int j = 1; j <= w; ++j) I.set_bit(j, 1);
      check_result(dicke_state(Sn, trivial, I).state, 1,
                   "D^" + std::to_string(w) + "_" + std::to_string(n));
    }
  }
}

void criterion_11_weight_classes(Checker& c) {
  for (int n = 3; n <= 8; ++n) {
    for (const GroupKind kind : {GroupKind::C, GroupKind::D}) {
      const auto G = make_subgroup(kind, n);
      const auto chars = dual_group(G);
      struct Entry {
        int weight;
        std::array<double, 2> spectrum;
      };
      std::vector<Entry> entries;
      for (const auto& orb : all_orbits(G)) {
        for (const auto& t : chars) {
          if (!compatible_with_orbit(t, orb)) continue;
          const auto dk = dicke_state_from_orbit(orb, t);
          const auto spectrum = density_spectrum(reduced_density(dk.state, {1}));
          entries.push_back({orb.representative.weight(), {spectrum[0], spectrum[1]}});

          const StateVector flipped =
              apply_local(LocalUnitaryNQ(static_cast<std::size_t>(n), pauli_x()), dk.state);
          const auto t2 = extract_character(flipped, G);
          if (!t2) {
            c.require(false, "X^n image lost G-invariance");
            continue;
          }
          const auto d = dicke_decompose(flipped, G);
          c.require(d.terms.size() == 1, "X^n image must be a single generalized Dicke state");
          if (d.terms.size() == 1) {
            c.require(d.terms[0].first.weight() == n - orb.representative.weight(),
                      "X^n image has the wrong weight");
            const auto mirror = dicke_state(G, *t2, d.terms[0].first);
            c.require(equal_up_to_phase(flipped, mirror.state).has_value(),
                      "X^n image is not a generalized Dicke state up to phase");
          }
        }
      }
      for (const auto& x : entries)
        for (const auto& y : entries) {
          const bool same = std::abs(x.spectrum[0] - y.spectrum[0]) < 1e-9 &&
                            std::abs(x.spectrum[1] - y.spectrum[1]) < 1e-9;
          const bool related = (y.weight == x.weight) || (y.weight == n - x.weight);
          if (same != related) {
            c.require(false, "spectrum/weight classification mismatch at n=" + std::to_string(n));
            return;
          }
        }
    }
  }
}

void criterion_12_degeneracy(Checker& c) {
  std::mt19937_64 rng(20240512);
  const auto A3 = make_subgroup(GroupKind::A, 3);
  const auto A4 = make_subgroup(GroupKind::A, 4);
  const auto t3 = char_with_123(A3, PhaseFraction(2, 3));
  const auto chars4 = dual_group(A4);

  for (int trial = 0; trial < 500; ++trial) {
    QubitTuple phis;
    if (trial % 2 == 0) {
      const Eigen::Vector2cd q = random_qubit(rng);
      for (int k = 0; k < 3; ++k)
        phis.push_back(std::polar(1.0, 6.2831853 * static_cast<double>(rng() % 1000) / 1000.0) * q);
    } else {
      for (int k = 0; k < 3; ++k) phis.push_back(random_qubit(rng));
    }
    const bool degenerate = a3_degenerate(phis);
    const bool zero = !gsym(A3, t3, phis).has_value();
    if (degenerate != zero) {
      c.require(false, "a3 biconditional fails at trial " + std::to_string(trial));
      return;
    }
  }

  int zero_nondegenerate = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const auto& t4 = chars4[1 + trial % 2];  // the two nontrivial characters
    QubitTuple phis;
    const int mode = trial % 3;
    if (mode == 0) {
      // three equal up to phase
      const Eigen::Vector2cd q = random_qubit(rng);
      phis = {std::polar(1.0, 0.4) * q, random_qubit(rng), q, std::polar(1.0, 2.2) * q};
      std::shuffle(phis.begin(), phis.end(), rng);
    } else if (mode == 1) {
      // constructed zero of the cubic in the rotated gauge
      const cd t123 = t4.evaluate(parse_cycles("(123)", 4)).value();
      const Eigen::Vector2cd p2 = random_qubit(rng);
      const Eigen::Vector2cd p3 = random_qubit(rng);
      const cd a = p2(0), b = p2(1), cc = p3(0), d = p3(1);
      const cd e = 1.0;
      const cd denom = a * d + t123 * t123 * b * cc;
      if (std::abs(denom) < 1e-3) continue;
      const cd f = -t123 * b * d * e / denom;
      Eigen::Vector2cd p4{e, f};
      p4 /= p4.norm();
      Eigen::Vector2cd p1;
      p1 << 1.0, 0.0;
      phis = {p1, p2, p3, p4};
    } else {
      for (int k = 0; k < 4; ++k) phis.push_back(random_qubit(rng));
    }
    const bool degenerate = a4_degenerate(phis);
    const bool zero = !gsym(A4, t4, phis).has_value();
    if (degenerate && !zero) {
      c.require(false, "a degenerate 4-tuple produced a nonzero symmetrization");
      return;
    }
    if (zero && !degenerate) {
      ++zero_nondegenerate;
      if (a4_symmetrization_residual(t4, phis) >= 1e-8) {
        c.require(false, "gsym-zero non-degenerate sample with large cubic residual");
        return;
      }
    }
  }
  c.require(zero_nondegenerate > 50, "sweep must hit the measure-zero locus often enough");
}

void criterion_13_higuchi_sudbery(Checker& c) {
  const auto report = lu_invariants(make_m4(), 2);
  const double avg = report.avg_bipartite_entropy;
  {
    std::ostringstream os;
    os.precision(12);
    os << "measured avgBipartiteEntropy(M4, 2) = " << std::fixed << avg;
    c.require(std::abs(avg - 2.0) <= 1e-9, os.str() + ", required 2.000000 +- 1e-9");
  }
  const double ghz_avg = lu_invariants(ghz(4), 2).avg_bipartite_entropy;
  c.require(avg > ghz_avg, "M4 average entropy must exceed the GHZ4 value");
  std::mt19937_64 rng(20240513);
  for (int trial = 0; trial < 100; ++trial) {
    const StateVector haar = permsym::testing::random_state(4, rng);
    const double value = lu_invariants(haar, 2).avg_bipartite_entropy;
    if (value >= avg) {
      c.require(false, "a Haar sample reached the M4 average entropy");
      return;
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  struct Criterion {
    int id;
    const char* name;
    std::function<void(Checker&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "Table I values for M4 under A4", criterion_1_table1},
      {2, "singlet is the only sign-character state (n=2..5)", criterion_2_singlet},
      {3, "dual(A_n) orders and A_n-trivial = symmetric subspace (n=3..6)", criterion_3_an_trivial},
      {4, "nontrivial A3/A4 invariant subspaces (M3 span, M4 line)", criterion_4_m3_m4_subspaces},
      {5, "M3 connector and conjugate connector reach the family (100 seeds)", criterion_5_theorem1},
      {6, "induced (a,b) action matches the direct computation (50 points)", criterion_6_induced_action},
      {7, "C_n -> D_n promotion agrees with the direct tau test (n=3..8, 200 each)", criterion_7_theorem2},
      {8, "cycle order vs mirror lines and reflection parity, exhaustive n <= 12", criterion_8_necklace_exhaustive},
      {9, "D_n -> S_n promotion agrees with direct S_n invariance (n=3..8, 200 each)", criterion_9_sn_promotion},
      {10, "stabilizer algebra dimensions (M4, GHZ4, Dicke, product)", criterion_10_stab_dims},
      {11, "single-qubit spectra classify Dicke weights; X^n flips the weight (n<=8)", criterion_11_weight_classes},
      {12, "degeneracy predicates vs symmetrization zeros (500-sample sweeps)", criterion_12_degeneracy},
      {13, "Higuchi-Sudbery spot check (M4 block-2 average entropy)", criterion_13_higuchi_sudbery},
  };

  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);

  int failures = 0;
  for (const auto& criterion : criteria) {
    if (only != 0 && criterion.id != only) continue;
    Checker checker;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.run(checker);
    } catch (const std::exception& e) {
      checker.require(false, std::string("exception: ") + e.what());
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::printf("[%s] criterion %2d: %s (%lld ms)\n", checker.ok ? "PASS" : "FAIL", criterion.id,
                criterion.name, static_cast<long long>(ms));
    if (!checker.ok) {
      std::printf("       %s\n", checker.detail.str().c_str());
      ++failures;
    }
  }
  std::printf("%d/%d criteria passed\n",
              static_cast<int>((only ? 1 : criteria.size())) - failures,
              static_cast<int>(only ? 1 : criteria.size()));
  return failures == 0 ? 0 : 1;
}
