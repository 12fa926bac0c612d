#include <benchmark/benchmark.h>

#include <limits>
#include <random>

#include "kemeny/barbell.hpp"
#include "kemeny/canonical.hpp"
#include "kemeny/census.hpp"
#include "kemeny/chain_matrices.hpp"
#include "kemeny/charpoly.hpp"
#include "kemeny/generators.hpp"
#include "kemeny/kemeny.hpp"

using namespace kemeny;

namespace {

const ScalarPolicy kFloat{ScalarMode::floating, 0};
const ScalarPolicy kExact{ScalarMode::exact, std::numeric_limits<std::size_t>::max()};

Graph sample(std::size_t n) {
  std::mt19937_64 rng(7);
  return random_regular_graph(n, 3, rng);
}

void BM_SpectrumEdge(benchmark::State& state) {
  const Graph g = sample(static_cast<std::size_t>(state.range(0)));
  const OrientedEdgeIndex idx(g);
  for (auto _ : state) benchmark::DoNotOptimize(kemeny_spectrum(edge_transition(g, idx, kFloat)));
}
BENCHMARK(BM_SpectrumEdge)->Arg(10)->Arg(20)->Arg(40);

void BM_MfptNb(benchmark::State& state) {
  const Graph g = sample(static_cast<std::size_t>(state.range(0)));
  const OrientedEdgeIndex idx(g);
  for (auto _ : state) benchmark::DoNotOptimize(kemeny_mfpt(nb_transition(g, idx, kFloat)).value);
}
BENCHMARK(BM_MfptNb)->Arg(10)->Arg(20)->Arg(40);

void BM_ExactCharpolyNb(benchmark::State& state) {
  const Graph g = sample(static_cast<std::size_t>(state.range(0)));
  const auto p = nb_transition(g, OrientedEdgeIndex(g), kExact);
  for (auto _ : state) benchmark::DoNotOptimize(charpoly_rational(p.exact()));
}
BENCHMARK(BM_ExactCharpolyNb)->Arg(6)->Arg(10)->Arg(14);

void BM_CanonicalForm(benchmark::State& state) {
  const Graph g = sample(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_graph6(g));
}
BENCHMARK(BM_CanonicalForm)->Arg(10)->Arg(20)->Arg(40);

void BM_CensusRecord(benchmark::State& state) {
  const Graph g = gen_petersen();
  for (auto _ : state) benchmark::DoNotOptimize(census_record(g));
}
BENCHMARK(BM_CensusRecord);

void BM_BarbellClosedForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(barbell_kemeny({n - 4, 3, 3}));
}
BENCHMARK(BM_BarbellClosedForm)->Arg(30)->Arg(300);

}  // namespace

BENCHMARK_MAIN();
