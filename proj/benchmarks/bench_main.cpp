#include <benchmark/benchmark.h>

#include <algorithm>
#include <string>
#include <vector>

#include "fundament/cohomology.hpp"
#include "fundament/decompose.hpp"
#include "fundament/fundament.hpp"
#include "fundament/lattice.hpp"

using namespace fundament;

namespace {

GroupPtr from_cycles(const std::vector<std::string>& gens) {
  std::vector<Permutation> perms;
  std::size_t degree = 0;
  for (const auto& g : gens) degree = std::max(degree, parse_cycles(g).size());
  for (const auto& g : gens) perms.push_back(parse_cycles(g, degree));
  return build_group(perms);
}

GroupPtr c2() {
  static GroupPtr g = from_cycles({"(1 2)"});
  return g;
}

Cover eta1() {
  static Cover c = Cover(GroupHom::from_generator_images(from_cycles({"(1 2 3 4)"}), c2(), {1}));
  return c;
}

Cover eta0() {
  static Cover c = Cover(GroupHom::from_generator_images(from_cycles({"(1 2)", "(3 4)"}), c2(), {1, 0}));
  return c;
}

// Order-64 groups used by the H² benchmarks.
GroupPtr order64(int which) {
  static const std::vector<GroupPtr> groups{
      from_cycles({"(1 2)", "(3 4)", "(5 6)", "(7 8)", "(9 10)", "(11 12)"}),
      from_cycles({"(1 2 3 4)", "(5 6 7 8)", "(9 10 11 12)"}),
      from_cycles({"(1 2 3 4)", "(1 3)", "(5 6 7 8)", "(5 7)"}),
  };
  return groups[static_cast<std::size_t>(which)];
}

void BM_H2TrivialF2(benchmark::State& state) {
  GroupPtr g = order64(static_cast<int>(state.range(0)));
  auto a = EndoField::make(GModule::trivial(g, 2, 1));
  for (auto _ : state) {
    auto s = CohomSpace::make(a);
    benchmark::DoNotOptimize(s->dim());
  }
  state.SetLabel(std::to_string(g->order()) + " elements");
}
BENCHMARK(BM_H2TrivialF2)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_FiberProductPower(benchmark::State& state) {
  std::vector<Cover> covers(static_cast<std::size_t>(state.range(0)), eta1());
  for (auto _ : state) {
    FiberProduct fp = fiber_product(c2(), covers);
    benchmark::DoNotOptimize(fp.carrier()->order());
  }
}
BENCHMARK(BM_FiberProductPower)->DenseRange(1, 6)->Unit(benchmark::kMicrosecond);

void BM_Invariants(benchmark::State& state) {
  std::vector<Cover> covers;
  for (int i = 0; i < state.range(0); ++i) covers.push_back(i % 2 ? eta0() : eta1());
  Cover pi = fiber_product(c2(), covers).structure_map();
  for (auto _ : state) benchmark::DoNotOptimize(invariants(pi).ab.size());
}
BENCHMARK(BM_Invariants)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void BM_IsomorphicFundamental(benchmark::State& state) {
  const std::size_t k = static_cast<std::size_t>(state.range(0));
  std::vector<Cover> all_twisted(k, eta1()), mixed(k, eta1());
  mixed[0] = eta0();
  Cover a = fiber_product(c2(), all_twisted).structure_map();
  Cover b = fiber_product(c2(), mixed).structure_map();
  for (auto _ : state) benchmark::DoNotOptimize(isomorphic_fundamental(a, b));
}
BENCHMARK(BM_IsomorphicFundamental)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_FundamentSeries(benchmark::State& state) {
  GroupPtr g = order64(static_cast<int>(state.range(0)));
  Cover pi = trivial_cover(g);
  for (auto _ : state) benchmark::DoNotOptimize(fundament_series(pi).kernels.size());
}
BENCHMARK(BM_FundamentSeries)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_Decompose(benchmark::State& state) {
  std::vector<Cover> covers;
  for (int i = 0; i < state.range(0); ++i) covers.push_back(i % 2 ? eta0() : eta1());
  Cover pi = fiber_product(c2(), covers).structure_map();
  for (auto _ : state) benchmark::DoNotOptimize(decompose_fundamental(pi).factors.size());
}
BENCHMARK(BM_Decompose)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void BM_NormalSubgroups(benchmark::State& state) {
  GroupPtr g = order64(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(normal_subgroups(g).size());
}
BENCHMARK(BM_NormalSubgroups)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
