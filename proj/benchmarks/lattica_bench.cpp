#include <benchmark/benchmark.h>

#include "lattica/category.hpp"
#include "lattica/context.hpp"
#include "lattica/generate.hpp"
#include "lattica/io.hpp"
#include "lattica/logic.hpp"
#include "lattica/morphism.hpp"
#include "lattica/topology.hpp"

using namespace lattica;

namespace {

FormalContext random_context(std::size_t n, std::uint64_t seed) {
  Generator g(seed);
  std::vector<std::string> objects, attributes;
  for (std::size_t i = 0; i < n; ++i) {
    objects.push_back("g" + std::to_string(i));
    attributes.push_back("m" + std::to_string(i));
  }
  std::vector<Bits> rows(n, Bits(n));
  for (auto& row : rows)
    for (std::size_t a = 0; a < n; ++a) row[a] = g.coin(0.4);
  return FormalContext::from_rows(objects, attributes, rows);
}

void BM_SemLattice(benchmark::State& state) {
  const auto p = random_context(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(sem_lattice(p).size());
}
BENCHMARK(BM_SemLattice)->DenseRange(4, 14, 2);

void BM_AlgLattice(benchmark::State& state) {
  const auto p = random_context(static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(alg_lattice(p).size());
}
BENCHMARK(BM_AlgLattice)->DenseRange(4, 10, 2);

void BM_IdealCompletion(benchmark::State& state) {
  const auto s = JoinSemilattice::from_poset(chain_poset(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(ideal_completion(s).size());
}
BENCHMARK(BM_IdealCompletion)->RangeMultiplier(2)->Range(4, 64);

void BM_EnumerateMappings(benchmark::State& state) {
  auto s = std::make_shared<const JoinSemilattice>(JoinSemilattice::from_poset(chain_poset(state.range(0))));
  auto d = std::make_shared<const JoinSemilattice>(JoinSemilattice::from_poset(diamond_poset()));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_mappings(s, d).size());
}
BENCHMARK(BM_EnumerateMappings)->DenseRange(1, 5);

void BM_Product(benchmark::State& state) {
  const auto p = random_context(static_cast<std::size_t>(state.range(0)), 13);
  for (auto _ : state) benchmark::DoNotOptimize(Product::make(p, p).sem().size());
}
BENCHMARK(BM_Product)->DenseRange(2, 6, 2);

void BM_FunctionSpace(benchmark::State& state) {
  const auto s = sem_lattice(context_of_semilattice(JoinSemilattice::from_poset(chain_poset(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(FunctionSpace::make(s, s).sem().size());
}
BENCHMARK(BM_FunctionSpace)->DenseRange(2, 5);

void BM_InformationSystemRoundTrip(benchmark::State& state) {
  Generator g(17);
  const auto is = g.information_system(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ccp_to_is(is_to_ccp(is)).size());
}
BENCHMARK(BM_InformationSystemRoundTrip)->DenseRange(4, 12, 4);

void BM_StoneSpaces(benchmark::State& state) {
  const auto s = MeetSemilattice::from_poset(chain_poset(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) {
    auto loc = lower_set_locale(s);
    benchmark::DoNotOptimize(stone_spaces(s, flt_lattice(s).lattice(), loc.locale).ok());
  }
}
BENCHMARK(BM_StoneSpaces)->DenseRange(2, 8, 2);

void BM_CxtRoundTrip(benchmark::State& state) {
  const auto text = write_cxt(random_context(static_cast<std::size_t>(state.range(0)), 19));
  for (auto _ : state) benchmark::DoNotOptimize(write_cxt(parse_cxt(text)).size());
}
BENCHMARK(BM_CxtRoundTrip)->RangeMultiplier(4)->Range(4, 256);

}  // namespace

BENCHMARK_MAIN();
