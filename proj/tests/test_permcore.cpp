#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "permsym/bitstring.hpp"
#include "permsym/errors.hpp"
#include "permsym/orbit.hpp"
#include "permsym/permutation.hpp"
#include "permsym/subgroup.hpp"

using namespace permsym;

namespace {

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

TEST_CASE("cycle parsing: basic forms") {
  const Permutation g = parse_cycles("(132)", 3);
  CHECK(g(1) == 3);
  CHECK(g(3) == 2);
  CHECK(g(2) == 1);

  CHECK(parse_cycles("e", 4).is_identity());
  CHECK(parse_cycles("()", 4).is_identity());
  CHECK(parse_cycles("(1,3,2)", 3) == parse_cycles("(132)", 3));
  CHECK(parse_cycles("(123)(124)", 4) == parse_cycles("(13)(24)", 4));

  // multi-digit entries need commas and are only parsed for n >= 10
  const Permutation big = parse_cycles("(1,10)", 10);
  CHECK(big(1) == 10);
  CHECK(big(10) == 1);
  CHECK_THROWS_AS(parse_cycles("(132)", 10), InvalidInputError);  // reads as the integer 132
}

TEST_CASE("cycle parsing: rejects malformed input") {
  CHECK_THROWS_AS(parse_cycles("(12", 3), InvalidInputError);
  CHECK_THROWS_AS(parse_cycles("12)", 3), InvalidInputError);
  CHECK_THROWS_AS(parse_cycles("(122)", 3), InvalidInputError);
  CHECK_THROWS_AS(parse_cycles("(14)", 3), InvalidInputError);
  CHECK_THROWS_AS(parse_cycles("(1)", 3), InvalidInputError);
  CHECK_THROWS_AS(parse_cycles("(1 2)", 3), InvalidInputError);
  CHECK_THROWS_AS(parse_cycles("(1,,2)", 3), InvalidInputError);
  CHECK_THROWS_AS(parse_cycles("x", 3), InvalidInputError);
  CHECK_THROWS_AS(parse_cycles("", 3), InvalidInputError);
  CHECK_THROWS_AS(parse_cycles("(12)e", 3), InvalidInputError);
}

TEST_CASE("canonical printer and round trip over S5") {
  CHECK(to_cycle_string(Permutation::identity(5)) == "e");
  CHECK(to_cycle_string(parse_cycles("(21)", 5)) == "(1,2)");
  CHECK(to_cycle_string(parse_cycles("(45)(31)", 5)) == "(1,3)(4,5)");

  const auto S5 = make_subgroup(GroupKind::S, 5);
  REQUIRE(S5->order() == 120);
  for (const auto& g : S5->elements()) {
    CHECK(parse_cycles(to_cycle_string(g), 5) == g);
  }
}

TEST_CASE("composition order is right to left") {
  // (g*h)(x) = g(h(x))
  const Permutation g = parse_cycles("(12)", 3);
  const Permutation h = parse_cycles("(23)", 3);
  const Permutation gh = g * h;
  CHECK(gh(3) == 1);  // h: 3->2, then g: 2->1
  CHECK(gh == parse_cycles("(123)", 3));
  CHECK((g * g.inverse()).is_identity());
}

TEST_CASE("subgroup orders") {
  for (int n = 1; n <= 6; ++n)
    CHECK(make_subgroup(GroupKind::S, n)->order() == static_cast<std::size_t>(factorial(n)));
  for (int n = 3; n <= 7; ++n)
    CHECK(make_subgroup(GroupKind::A, n)->order() == static_cast<std::size_t>(factorial(n) / 2));
  CHECK(make_subgroup(GroupKind::A, 8)->order() == static_cast<std::size_t>(factorial(8) / 2));
  for (int n = 1; n <= 12; ++n)
    CHECK(make_subgroup(GroupKind::C, n)->order() == static_cast<std::size_t>(n));
  for (int n = 3; n <= 12; ++n)
    CHECK(make_subgroup(GroupKind::D, n)->order() == static_cast<std::size_t>(2 * n));
  CHECK(make_subgroup(GroupKind::C, 1)->order() == 1);
  CHECK(make_subgroup(GroupKind::D, 6)->order() == 12);
}

TEST_CASE("A4 is the 8 three-cycles, 3 double transpositions, and e") {
  const auto A4 = make_subgroup(GroupKind::A, 4);
  REQUIRE(A4->order() == 12);
  int three_cycles = 0, double_transpositions = 0, identity = 0;
  for (const auto& g : A4->elements()) {
    CHECK(g.is_even());
    const auto cycles = g.cycles();
    if (cycles.empty())
      ++identity;
    else if (cycles.size() == 1 && cycles[0].size() == 3)
      ++three_cycles;
    else if (cycles.size() == 2 && cycles[0].size() == 2 && cycles[1].size() == 2)
      ++double_transpositions;
  }
  CHECK(identity == 1);
  CHECK(three_cycles == 8);
  CHECK(double_transpositions == 3);
}

TEST_CASE("closure, membership and generator containment") {
  for (const GroupKind kind : {GroupKind::S, GroupKind::A, GroupKind::C, GroupKind::D}) {
    for (int n = 1; n <= 5; ++n) {
      const auto G = make_subgroup(kind, n);
      for (const auto& gen : G->generators()) CHECK(G->contains(gen));
      for (const auto& g : G->elements()) {
        CHECK(G->contains(g.inverse()));
        for (const auto& h : G->elements()) CHECK(G->contains(g * h));
      }
    }
  }
}

TEST_CASE("enumeration caps") {
  CHECK_THROWS_AS(make_subgroup(GroupKind::S, 9), CapExceededError);
  CHECK_THROWS_AS(make_subgroup(GroupKind::A, 9), CapExceededError);
  CHECK_THROWS_AS(make_subgroup(GroupKind::C, 21), CapExceededError);
  CHECK_THROWS_AS(make_subgroup(GroupKind::D, 21), CapExceededError);
  // caps are configuration, not constants
  SubgroupCaps caps;
  caps.max_n_cyclic = 22;
  CHECK(make_subgroup(GroupKind::C, 21, caps)->order() == 21);
}

TEST_CASE("action on bit strings") {
  const Permutation eps = full_cycle(6);
  CHECK(act_on_bits(eps, BitString::from_string("101100")).str() == "010110");

  const Permutation tau = mirror_reversal(6);
  CHECK(act_on_bits(tau, BitString::from_string("110100")).str() == "001011");

  const BitString I = BitString::from_string("0110");
  CHECK(act_on_bits(Permutation::identity(4), I) == I);

  CHECK_THROWS_AS(act_on_bits(Permutation::identity(3), I), InvalidInputError);

  // packed-index action agrees with the string action
  for (std::uint64_t idx = 0; idx < 64; ++idx)
    CHECK(act_on_index(eps, idx) == act_on_bits(eps, BitString::from_index(6, idx)).index());
}

TEST_CASE("action law (gh).I = g.(h.I) and e.I = I") {
  std::mt19937_64 rng(31);
  const auto S4 = make_subgroup(GroupKind::S, 4);
  for (const auto& g : S4->elements())
    for (const auto& h : S4->elements())
      for (std::uint64_t idx = 0; idx < 16; ++idx) {
        const BitString I = BitString::from_index(4, idx);
        CHECK(act_on_bits(g * h, I) == act_on_bits(g, act_on_bits(h, I)));
      }

  const auto D8 = make_subgroup(GroupKind::D, 8);
  for (int trial = 0; trial < 1000; ++trial) {
    const BitString I = BitString::from_index(8, rng() & 0xff);
    const auto& g = D8->elements()[rng() % D8->order()];
    const auto& h = D8->elements()[rng() % D8->order()];
    CHECK(act_on_bits(g * h, I) == act_on_bits(g, act_on_bits(h, I)));
    CHECK(act_on_bits(Permutation::identity(8), I) == I);
  }
}

TEST_CASE("orbit examples") {
  SUBCASE("C6 orbit of 101100 has 6 members, trivial stabilizer") {
    const auto C6 = make_subgroup(GroupKind::C, 6);
    const auto orb = orbit_of(C6, BitString::from_string("101100"));
    // oracle: direct right shifts
    std::set<std::string> shifts;
    std::string s = "101100";
    for (int k = 0; k < 6; ++k) {
      shifts.insert(s);
      s = s.back() + s.substr(0, 5);
    }
    CHECK(shifts.size() == 6);
    CHECK(orb.members.size() == 6);
    for (const auto& J : orb.members) CHECK(shifts.count(J.str()) == 1);
    CHECK(orb.stabilizer_order == 1);
  }
  SUBCASE("S3 orbit of 100") {
    const auto S3 = make_subgroup(GroupKind::S, 3);
    const auto orb = orbit_of(S3, BitString::from_string("100"));
    CHECK(orb.members.size() == 3);
    CHECK(orb.stabilizer_order == 2);
    CHECK(orb.representative.str() == "100");
  }
  SUBCASE("A4 orbit of 0001 is fixed by (123), stabilizer order 3") {
    const auto A4 = make_subgroup(GroupKind::A, 4);
    const auto orb = orbit_of(A4, BitString::from_string("0001"));
    CHECK(orb.stabilizer_order == 3);
    const BitString I = BitString::from_string("0001");
    CHECK(act_on_bits(parse_cycles("(123)", 4), I) == I);
    const auto stab = stabilizer_of(*A4, I);
    CHECK(stab.size() == 3);
  }
}

TEST_CASE("orbit-stabilizer and transversal contracts, exhaustive") {
  for (const GroupKind kind : {GroupKind::S, GroupKind::A}) {
    for (int n = 1; n <= 8; ++n) {
      const auto G = make_subgroup(kind, n);
      std::size_t covered = 0;
      for (const auto& orb : all_orbits(G)) {
        CHECK(orb.members.size() * orb.stabilizer_order == G->order());
        CHECK(orb.contains(orb.representative));
        for (const auto& J : orb.members) CHECK(orb.representative.index() >= J.index());
        for (std::size_t i = 0; i < orb.members.size(); ++i)
          CHECK(act_on_bits(orb.transversal[i], orb.representative) == orb.members[i]);
        covered += orb.members.size();
      }
      CHECK(covered == (std::size_t{1} << n));
    }
  }
  for (const GroupKind kind : {GroupKind::C, GroupKind::D}) {
    for (int n = 1; n <= 8; ++n) {
      const auto G = make_subgroup(kind, n);
      std::size_t covered = 0;
      for (const auto& orb : all_orbits(G)) {
        CHECK(orb.members.size() * orb.stabilizer_order == G->order());
        for (std::size_t i = 0; i < orb.members.size(); ++i)
          CHECK(act_on_bits(orb.transversal[i], orb.representative) == orb.members[i]);
        covered += orb.members.size();
      }
      CHECK(covered == (std::size_t{1} << n));
    }
  }
}

TEST_CASE("all_orbits counts and ordering") {
  CHECK(all_orbits(make_subgroup(GroupKind::C, 6)).size() == 14);
  CHECK(all_orbits(make_subgroup(GroupKind::C, 4)).size() == 6);
  CHECK(all_orbits(make_subgroup(GroupKind::S, 3)).size() == 4);

  const auto orbits = all_orbits(make_subgroup(GroupKind::C, 6));
  for (std::size_t i = 1; i < orbits.size(); ++i)
    CHECK(orbits[i - 1].representative.index() > orbits[i].representative.index());

  // weights classify S_n orbits
  const auto sorbits = all_orbits(make_subgroup(GroupKind::S, 5));
  CHECK(sorbits.size() == 6);
  for (const auto& orb : sorbits)
    for (const auto& J : orb.members) CHECK(J.weight() == orb.representative.weight());
}
