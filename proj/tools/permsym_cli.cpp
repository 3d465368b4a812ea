// permsym: constructs, verifies and classifies n-qubit states invariant
// under the permutation subgroups S_n, A_n, C_n, D_n.
//
// JSON goes to stdout, diagnostics to stderr. Exit codes: 0 ok, 2 usage,
// 3 invalid input, 4 not invariant, 5 cap exceeded.

#include <complex>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "permsym/dicke.hpp"
#include "permsym/errors.hpp"
#include "permsym/gsym.hpp"
#include "permsym/local_unitary.hpp"
#include "permsym/lu_invariants.hpp"
#include "permsym/necklace.hpp"
#include "permsym/stab_algebra.hpp"

using namespace permsym;
using nlohmann::json;
using cd = std::complex<double>;

namespace {

double round12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::atof(buf);
}

json round12_json(const json& j) {
  if (j.is_number_float()) return round12(j.get<double>());
  if (j.is_array()) {
    json out = json::array();
    for (const auto& item : j) out.push_back(round12_json(item));
    return out;
  }
  if (j.is_object()) {
    json out = json::object();
    for (const auto& [key, value] : j.items()) out[key] = round12_json(value);
    return out;
  }
  return j;
}

void emit(const json& j) { std::cout << round12_json(j).dump(2) << "\n"; }

json complex_json(cd z) { return json::array({z.real(), z.imag()}); }

json matrix2_json(const Eigen::Matrix2cd& m) {
  return json::array({json::array({complex_json(m(0, 0)), complex_json(m(0, 1))}),
                      json::array({complex_json(m(1, 0)), complex_json(m(1, 1))})});
}

cd parse_complex_pair(const std::string& text) {
  double re = 0, im = 0;
  if (std::sscanf(text.c_str(), "%lf,%lf", &re, &im) != 2)
    throw InvalidInputError("expected a complex number as re,im: '" + text + "'");
  return {re, im};
}

PhaseFraction parse_fraction(const std::string& text) {
  long long num = 0, den = 1;
  if (std::sscanf(text.c_str(), "%lld/%lld", &num, &den) == 2) return {num, den};
  if (std::sscanf(text.c_str(), "%lld", &num) == 1) return {num, 1};
  throw InvalidInputError("expected an angle fraction as num/den: '" + text + "'");
}

struct GroupSpec {
  std::string group;  // "S" or "S4"
  int n = 0;

  SubgroupPtr make() const {
    if (group.empty()) throw InvalidInputError("--group is required");
    const GroupKind kind = kind_from_char(group[0]);
    int arity = n;
    if (group.size() > 1) {
      try {
        arity = std::stoi(group.substr(1));
      } catch (const std::exception&) {
        throw InvalidInputError("bad group label '" + group + "'");
      }
      if (n != 0 && n != arity) throw InvalidInputError("--group suffix disagrees with --n");
    }
    if (arity == 0) throw InvalidInputError("--n is required (or use a label like S4)");
    return make_subgroup(kind, arity);
  }
};

struct CharSpec {
  int index = -1;
  std::string t_epsilon;
  int t_tau = 0;

  PhaseHom select(const SubgroupPtr& G) const {
    const auto chars = dual_group(G);
    if (index >= 0) {
      if (static_cast<std::size_t>(index) >= chars.size())
        throw InvalidInputError("--char index out of range; the dual group has " +
                                std::to_string(chars.size()) + " characters");
      return chars[static_cast<std::size_t>(index)];
    }
    if (!t_epsilon.empty()) {
      if (G->kind() != GroupKind::C && G->kind() != GroupKind::D)
        throw InvalidInputError("--t-epsilon applies to C and D groups; use --char");
      const PhaseFraction target = parse_fraction(t_epsilon);
      const PhaseFraction tau_target = t_tau == -1 ? PhaseFraction::minus_one() : PhaseFraction::one();
      std::vector<PhaseHom> hits;
      for (const auto& t : chars) {
        if (t.evaluate(full_cycle(G->n())) != target) continue;
        if (G->kind() == GroupKind::D && t_tau != 0 &&
            t.evaluate(mirror_reversal(G->n())) != tau_target)
          continue;
        hits.push_back(t);
      }
      if (hits.empty()) throw InvalidInputError("no character with the requested values");
      if (hits.size() > 1)
        throw InvalidInputError("character is ambiguous; add --t-tau 1 or --t-tau -1");
      return hits.front();
    }
    return chars.front();  // trivial character
  }
};

const char* phase_name(const PhaseFraction& v) {
  if (v == PhaseFraction::one()) return "1";
  if (v == PhaseFraction::minus_one()) return "-1";
  if (v == PhaseFraction(1, 3)) return "omega";
  if (v == PhaseFraction(2, 3)) return "omega^2";
  if (v == PhaseFraction(1, 4)) return "i";
  if (v == PhaseFraction(3, 4)) return "-i";
  return nullptr;
}

std::string phase_label(const PhaseFraction& v) {
  if (const char* name = phase_name(v)) return name;
  return "e^(2*pi*i*" + v.str() + ")";
}

json verdicts_json(const DnPromotionReport& rep) {
  return {{"i", to_string(rep.conditions[0])},
          {"ii", to_string(rep.conditions[1])},
          {"iii", to_string(rep.conditions[2])},
          {"iv", to_string(rep.conditions[3])}};
}

// ---------------------------------------------------------------------------
// subcommand bodies

void cmd_orbits(const GroupSpec& gs, bool csv) {
  const auto G = gs.make();
  const auto orbits = all_orbits(G);
  if (csv) {
    std::printf("representative,size,stabilizerOrder\n");
    for (const auto& orb : orbits)
      std::printf("%s,%zu,%zu\n", orb.representative.str().c_str(), orb.members.size(),
                  orb.stabilizer_order);
    return;
  }
  json list = json::array();
  for (const auto& orb : orbits) {
    json members = json::array();
    for (const auto& J : orb.members) members.push_back(J.str());
    list.push_back({{"representative", orb.representative.str()},
                    {"size", orb.members.size()},
                    {"stabilizerOrder", orb.stabilizer_order},
                    {"members", members}});
  }
  emit({{"schema", "permsym.orbits/1"},
        {"status", "ok"},
        {"group", G->label()},
        {"orbits", list}});
}

void cmd_characters(const GroupSpec& gs, bool csv) {
  const auto G = gs.make();
  const auto chars = dual_group(G);
  if (csv) {
    std::printf("index,sigma,num,den\n");
    for (std::size_t i = 0; i < chars.size(); ++i)
      for (const auto& g : G->generators()) {
        const auto v = chars[i].evaluate(g);
        std::printf("%zu,%s,%lld,%lld\n", i, to_cycle_string(g).c_str(),
                    static_cast<long long>(v.num()), static_cast<long long>(v.den()));
      }
    return;
  }
  json list = json::array();
  for (std::size_t i = 0; i < chars.size(); ++i) {
    json entry = phase_hom_to_json(chars[i]);
    entry["index"] = i;
    entry["trivial"] = chars[i].is_trivial();
    list.push_back(entry);
  }
  emit({{"schema", "permsym.characters/1"},
        {"status", "ok"},
        {"group", G->label()},
        {"characters", list}});
}

void cmd_dicke(const GroupSpec& gs, const CharSpec& cs, const std::string& bits) {
  const auto G = gs.make();
  const auto t = cs.select(G);
  const auto dk = dicke_state(G, t, BitString::from_string(bits));
  emit(state_to_json(dk.state));
}

void cmd_symmetrize(const GroupSpec& gs, const CharSpec& cs, const std::vector<std::string>& qubits) {
  const auto G = gs.make();
  const auto t = cs.select(G);
  QubitTuple phis;
  for (const auto& text : qubits) {
    double v[4];
    const int fields = std::sscanf(text.c_str(), "%lf,%lf,%lf,%lf", &v[0], &v[1], &v[2], &v[3]);
    if (fields == 2) {
      phis.push_back(BlochPoint{v[0], v[1]}.state());
    } else if (fields == 4) {
      Eigen::Vector2cd q;
      q << cd(v[0], v[1]), cd(v[2], v[3]);
      const double nrm = q.norm();
      // forgive decimal rounding in typed amplitudes
      if (std::abs(nrm - 1.0) > 1e-3) throw InvalidInputError("qubit amplitudes must be normalized");
      phis.push_back(q / nrm);
    } else {
      throw InvalidInputError("--qubit takes theta,phi or re,im,re,im: '" + text + "'");
    }
  }
  const StateVector raw = gsym_unnormalized(G, t, phis);
  const double nrm = raw.norm();
  if (nrm < kGsymZeroEps) {
    emit({{"schema", "permsym.symmetrize/1"},
          {"status", "ok"},
          {"zero", true},
          {"unnormalizedNorm", nrm}});
    return;
  }
  emit(state_to_json(StateVector(raw.n(), raw.amps() / nrm)));
}

void cmd_invariance(const GroupSpec& gs, const std::string& state_path) {
  const StateVector psi = read_state_file(state_path);
  GroupSpec spec = gs;
  if (spec.n == 0 && spec.group.size() == 1) spec.n = psi.n();
  const auto G = spec.make();
  const auto t = extract_character(psi, G);
  if (!t) {
    emit({{"schema", "permsym.invariance/1"},
          {"status", "not-invariant"},
          {"group", G->label()},
          {"invariant", false}});
    throw NotInvariantError("state is not " + G->label() + "-invariant");
  }
  emit({{"schema", "permsym.invariance/1"},
        {"status", "ok"},
        {"group", G->label()},
        {"invariant", true},
        {"character", phase_hom_to_json(*t)}});
}

void cmd_decompose(const GroupSpec& gs, const std::string& state_path) {
  const StateVector psi = read_state_file(state_path);
  GroupSpec spec = gs;
  if (spec.n == 0 && spec.group.size() == 1) spec.n = psi.n();
  const auto G = spec.make();
  const auto d = dicke_decompose(psi, G);
  json terms = json::array();
  for (const auto& [rep, coeff] : d.terms)
    terms.push_back({{"representative", rep.str()}, {"coefficient", complex_json(coeff)}});
  emit({{"schema", "permsym.decompose/1"},
        {"status", "ok"},
        {"group", G->label()},
        {"character", phase_hom_to_json(d.character)},
        {"terms", terms}});
}

void cmd_necklace(const std::string& bits) {
  const auto nc = classify_necklace(BitString::from_string(bits));
  json members = json::array();
  for (const auto& J : nc.orbit.members) members.push_back(J.str());
  emit({{"schema", "permsym.necklace/1"},
        {"status", "ok"},
        {"type", to_string(nc.type)},
        {"cycleOrder", nc.cycle_order},
        {"mirrorLines", nc.mirror_lines},
        {"members", members}});
}

void cmd_check_dn(const std::string& state_path) {
  const auto rep = check_dn_promotion(read_state_file(state_path));
  json j{{"schema", "permsym.check-dn/1"},
         {"status", "ok"},
         {"isDn", rep.is_dn},
         {"conditions", verdicts_json(rep)}};
  j["sTau"] = rep.s_tau ? json(*rep.s_tau) : json(nullptr);
  emit(j);
}

void cmd_check_sn(const std::string& state_path) {
  const auto rep = check_sn_promotion(read_state_file(state_path));
  emit({{"schema", "permsym.check-sn/1"},
        {"status", "ok"},
        {"isSn", rep.is_sn},
        {"conditions",
         {{"i", to_string(rep.conditions[0])}, {"ii", to_string(rep.conditions[1])}}}});
}

void cmd_m3(const std::string& a_text, const std::string& b_text) {
  emit(state_to_json(make_m3(parse_complex_pair(a_text), parse_complex_pair(b_text))));
}

void cmd_m3_lu(const std::string& a_text, const std::string& b_text, bool conjugate) {
  const cd a = parse_complex_pair(a_text);
  const cd b = parse_complex_pair(b_text);
  const StateVector source = make_m3(1, 0);
  json j{{"schema", "permsym.m3-lu/1"}, {"status", "ok"}};
  if (!conjugate) {
    const LocalUnitary1Q U = m3_connector(a, b);
    const StateVector img = apply_local(LocalUnitaryNQ(3, U), source);
    const StateVector target = make_m3(a, b);
    const cd overlap = inner(target, img);
    const cd lambda = overlap / std::abs(overlap);
    j["u"] = matrix2_json(U);
    j["overlap"] = std::abs(overlap);
    j["residual"] = (img.amps() - lambda * target.amps()).norm();
  } else {
    const auto ops = m3_conjugate_connector(a, b);
    const StateVector img = apply_local(ops, source);
    const StateVector target = conj_state(make_m3(a, b));
    const cd overlap = inner(target, img);
    const cd lambda = overlap / std::abs(overlap);
    j["factors"] = json::array({matrix2_json(ops[0]), matrix2_json(ops[1]), matrix2_json(ops[2])});
    j["overlap"] = std::abs(overlap);
    j["residual"] = (img.amps() - lambda * target.amps()).norm();
  }
  emit(j);
}

void cmd_stab_dim(const std::string& state_path, double cutoff) {
  const auto result = stab_algebra_dim(read_state_file(state_path), cutoff);
  emit({{"schema", "permsym.stab-dim/1"},
        {"status", "ok"},
        {"dimension", result.dimension},
        {"cutoff", result.cutoff},
        {"residuals", result.residuals}});
}

void cmd_invariants(const std::string& state_path, int block, const std::string& compare_path,
                    std::uint64_t seed, int trials) {
  const StateVector psi = read_state_file(state_path);
  const auto report = lu_invariants(psi, block);
  json singles = json::array();
  for (const auto& spectrum : report.single_qubit_spectra)
    singles.push_back(json::array({spectrum[0], spectrum[1]}));
  json blocks = json::array();
  for (const auto& [qubits, spectrum] : report.bipartite_spectra)
    blocks.push_back({{"block", qubits}, {"spectrum", spectrum}});
  json j{{"schema", "permsym.invariants/1"},
         {"status", "ok"},
         {"n", report.n},
         {"blockSize", report.block_size},
         {"singleQubitSpectra", singles},
         {"bipartiteSpectra", blocks},
         {"avgBipartiteEntropy", report.avg_bipartite_entropy}};
  if (!compare_path.empty()) {
    const StateVector other = read_state_file(compare_path);
    const auto other_report = lu_invariants(other, block);
    bool singles_match = other.n() == psi.n();
    for (int q = 0; singles_match && q < report.n; ++q)
      singles_match = std::abs(report.single_qubit_spectra[static_cast<std::size_t>(q)][0] -
                               other_report.single_qubit_spectra[static_cast<std::size_t>(q)][0]) < 1e-9;
    const auto evidence = random_local_search(psi, other, seed, trials);
    j["comparison"] = {{"singleQubitSpectraMatch", singles_match},
                       {"avgBipartiteEntropyOther", other_report.avg_bipartite_entropy},
                       {"bestOverlap", evidence.best_overlap},
                       {"trials", evidence.trials},
                       {"certifying", false}};
  }
  emit(j);
}

void cmd_table1(bool csv) {
  const auto A4 = make_subgroup(GroupKind::A, 4);
  const auto t = extract_character(make_m4(), A4, /*verify_all_elements=*/true);
  if (!t) throw NotInvariantError("M4 failed its own invariance check");
  const std::vector<std::string> rows = {"e",     "(12)(34)", "(13)(24)", "(14)(23)",
                                         "(123)", "(132)",    "(124)",    "(142)",
                                         "(234)", "(243)",    "(134)",    "(143)"};
  if (csv) {
    std::printf("sigma,t\n");
    for (const auto& sigma : rows)
      std::printf("%s,%s\n", sigma.c_str(),
                  phase_label(t->evaluate(parse_cycles(sigma, 4))).c_str());
    return;
  }
  json list = json::array();
  for (const auto& sigma : rows) {
    const PhaseFraction v = t->evaluate(parse_cycles(sigma, 4));
    list.push_back({{"sigma", sigma},
                    {"t", phase_label(v)},
                    {"angle", {v.num(), v.den()}},
                    {"value", complex_json(v.value())}});
  }
  emit({{"schema", "permsym.table1/1"}, {"status", "ok"}, {"rows", list}});
}

void emit_error(const std::string& status, const std::exception& e) {
  std::cerr << "error: " << e.what() << "\n";
  emit({{"schema", "permsym.error/1"}, {"status", status}, {"error", e.what()}});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"states invariant under permutation subgroups of S_n"};
  app.require_subcommand(1);
  std::uint64_t seed = 12345;
  app.add_option("--seed", seed, "seed for randomized evidence modes");

  GroupSpec gs;
  CharSpec cs;
  std::string bits, state_path, compare_path;
  std::string a_text = "1,0", b_text = "0,0";
  std::vector<std::string> qubits;
  bool csv_orbits = false, csv_chars = false, csv_table = false, conjugate = false;
  int block = 1, trials = 500;
  double cutoff = 1e-8;

  auto add_group = [&](CLI::App* cmd, bool required) {
    auto* g = cmd->add_option("--group", gs.group, "group kind S|A|C|D, optionally with n (e.g. S4)");
    cmd->add_option("--n", gs.n, "arity");
    if (required) g->required();
  };
  auto add_char = [&](CLI::App* cmd) {
    cmd->add_option("--char", cs.index, "character index into the dual group (default: trivial)");
    cmd->add_option("--t-epsilon", cs.t_epsilon, "character by its angle fraction on the full cycle (C/D)");
    cmd->add_option("--t-tau", cs.t_tau, "character value on the reversal: 1 or -1 (D)")
        ->check(CLI::IsMember({1, -1}));
  };

  auto* orbits_cmd = app.add_subcommand("orbits", "enumerate the G-orbits of n-bit strings");
  add_group(orbits_cmd, true);
  orbits_cmd->add_flag("--csv", csv_orbits, "emit CSV instead of JSON");

  auto* chars_cmd = app.add_subcommand("characters", "enumerate the dual group of G");
  add_group(chars_cmd, true);
  chars_cmd->add_flag("--csv", csv_chars, "emit CSV instead of JSON");

  auto* dicke_cmd = app.add_subcommand("dicke", "generalized Dicke state of an orbit and character");
  add_group(dicke_cmd, true);
  add_char(dicke_cmd);
  dicke_cmd->add_option("--bits", bits, "seed bit string, e.g. 101100")->required();

  auto* sym_cmd = app.add_subcommand("symmetrize", "G-symmetrization of 1-qubit states");
  add_group(sym_cmd, true);
  add_char(sym_cmd);
  sym_cmd->add_option("--qubit", qubits, "qubit as theta,phi or re,im,re,im (repeat n times)")
      ->required();

  auto* inv_cmd = app.add_subcommand("invariance", "test G-invariance and extract the character");
  add_group(inv_cmd, true);
  inv_cmd->add_option("--state", state_path, "state JSON file")->required();

  auto* dec_cmd = app.add_subcommand("decompose", "generalized Dicke decomposition of a state");
  add_group(dec_cmd, true);
  dec_cmd->add_option("--state", state_path, "state JSON file")->required();

  auto* neck_cmd = app.add_subcommand("necklace", "classify the necklace diagram of a bit string");
  neck_cmd->add_option("--bits", bits, "bit string, e.g. 101100")->required();

  auto* dn_cmd = app.add_subcommand("check-dn", "does a C_n-invariant state promote to D_n?");
  dn_cmd->add_option("--state", state_path, "state JSON file")->required();

  auto* sn_cmd = app.add_subcommand("check-sn", "does a D_n-invariant state promote to S_n?");
  sn_cmd->add_option("--state", state_path, "state JSON file")->required();

  auto* m3_cmd = app.add_subcommand("m3", "the 3-qubit state a|alpha> + b|beta>");
  m3_cmd->add_option("--a", a_text, "complex a as re,im")->required();
  m3_cmd->add_option("--b", b_text, "complex b as re,im")->required();

  app.add_subcommand("m4", "the Higuchi-Sudbery 4-qubit state");

  auto* m3lu_cmd = app.add_subcommand("m3-lu", "local unitary connecting M3(1,0) to M3(a,b)");
  m3lu_cmd->add_option("--a", a_text, "complex a as re,im")->required();
  m3lu_cmd->add_option("--b", b_text, "complex b as re,im")->required();
  m3lu_cmd->add_flag("--conjugate", conjugate, "target the conjugate family instead");

  auto* stab_cmd = app.add_subcommand("stab-dim", "local unitary stabilizer algebra dimension");
  stab_cmd->add_option("--state", state_path, "state JSON file")->required();
  stab_cmd->add_option("--cutoff", cutoff, "relative singular value cutoff");

  auto* luinv_cmd = app.add_subcommand("invariants", "reduced density spectra and entropies");
  luinv_cmd->add_option("--state", state_path, "state JSON file")->required();
  luinv_cmd->add_option("--block", block, "bipartition block size")->required();
  luinv_cmd->add_option("--compare", compare_path, "second state: compare invariants, search overlap");
  luinv_cmd->add_option("--trials", trials, "random search trials for --compare");

  auto* table_cmd = app.add_subcommand("table1", "t values of M4 under every element of A_4");
  table_cmd->add_flag("--csv", csv_table, "emit CSV instead of JSON");

  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (orbits_cmd->parsed()) cmd_orbits(gs, csv_orbits);
    else if (chars_cmd->parsed()) cmd_characters(gs, csv_chars);
    else if (dicke_cmd->parsed()) cmd_dicke(gs, cs, bits);
    else if (sym_cmd->parsed()) cmd_symmetrize(gs, cs, qubits);
    else if (inv_cmd->parsed()) cmd_invariance(gs, state_path);
    else if (dec_cmd->parsed()) cmd_decompose(gs, state_path);
    else if (neck_cmd->parsed()) cmd_necklace(bits);
    else if (dn_cmd->parsed()) cmd_check_dn(state_path);
    else if (sn_cmd->parsed()) cmd_check_sn(state_path);
    else if (m3_cmd->parsed()) cmd_m3(a_text, b_text);
    else if (app.get_subcommand("m4")->parsed()) emit(state_to_json(make_m4()));
    else if (m3lu_cmd->parsed()) cmd_m3_lu(a_text, b_text, conjugate);
    else if (stab_cmd->parsed()) cmd_stab_dim(state_path, cutoff);
    else if (luinv_cmd->parsed()) cmd_invariants(state_path, block, compare_path, seed, trials);
    else if (table_cmd->parsed()) cmd_table1(csv_table);
  } catch (const CapExceededError& e) {
    emit_error("cap-exceeded", e);
    return 5;
  } catch (const NotInvariantError& e) {
    if (!inv_cmd->parsed()) emit_error("not-invariant", e);
    else std::cerr << "error: " << e.what() << "\n";  // envelope already printed
    return 4;
  } catch (const InvalidInputError& e) {
    emit_error("invalid-input", e);
    return 3;
  } catch (const std::exception& e) {
    emit_error("invalid-input", e);
    return 3;
  }
  return 0;
}
