#include <benchmark/benchmark.h>

#include <random>

#include "permsym/dicke.hpp"
#include "permsym/gsym.hpp"
#include "permsym/necklace.hpp"
#include "permsym/stab_algebra.hpp"

using namespace permsym;

namespace {

void BM_MakeSubgroup(benchmark::State& state) {
  const auto kind = static_cast<GroupKind>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(make_subgroup(kind, n));
}

void BM_AllOrbits(benchmark::State& state) {
  const auto G = make_subgroup(GroupKind::C, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(all_orbits(G));
}

void BM_DualGroup(benchmark::State& state) {
  const auto G = make_subgroup(GroupKind::S, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dual_group(G));
}

void BM_DickeState(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto G = make_subgroup(GroupKind::C, n);
  const auto t = dual_group(G)[1];
  BitString I(n);
  I.set_bit(1, 1);
  I.set_bit(3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(dicke_state(G, t, I));
}

void BM_ExtractCharacter(benchmark::State& state) {
  const auto G = make_subgroup(GroupKind::A, 4);
  const StateVector m4 = make_m4();
  for (auto _ : state) benchmark::DoNotOptimize(extract_character(m4, G));
}

void BM_Gsym(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto G = make_subgroup(GroupKind::S, n);
  const auto t = dual_group(G)[0];
  std::mt19937_64 rng(1);
  std::normal_distribution<double> gauss;
  QubitTuple phis;
  for (int k = 0; k < n; ++k) {
    Eigen::Vector2cd q;
    q << std::complex<double>(gauss(rng), gauss(rng)), std::complex<double>(gauss(rng), gauss(rng));
    phis.push_back(q / q.norm());
  }
  for (auto _ : state) benchmark::DoNotOptimize(gsym(G, t, phis));
}

void BM_ClassifyNecklace(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BitString I = BitString::from_index(n, (std::uint64_t{1} << n) / 3);
  for (auto _ : state) benchmark::DoNotOptimize(classify_necklace(I));
}

void BM_StabAlgebra(benchmark::State& state) {
  const StateVector m4 = make_m4();
  for (auto _ : state) benchmark::DoNotOptimize(stab_algebra_dim(m4));
}

}  // namespace

BENCHMARK(BM_MakeSubgroup)->Args({static_cast<int>(GroupKind::S), 6})->Args({static_cast<int>(GroupKind::A), 6})->Args({static_cast<int>(GroupKind::D), 12});
BENCHMARK(BM_AllOrbits)->Arg(8)->Arg(12)->Arg(16);
BENCHMARK(BM_DualGroup)->Arg(5)->Arg(6);
BENCHMARK(BM_DickeState)->Arg(8)->Arg(12);
BENCHMARK(BM_ExtractCharacter);
BENCHMARK(BM_Gsym)->Arg(4)->Arg(6);
BENCHMARK(BM_ClassifyNecklace)->Arg(8)->Arg(12);
BENCHMARK(BM_StabAlgebra);

BENCHMARK_MAIN();
