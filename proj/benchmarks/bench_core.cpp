#include <benchmark/benchmark.h>

#include "shyang/exprio/parser.hpp"
#include "shyang/exprio/printer.hpp"
#include "shyang/invariants/molien.hpp"
#include "shyang/kleinian/kleinian.hpp"
#include "shyang/yangian/algebra.hpp"
#include "shyang/yangian/central.hpp"
#include "shyang/yangian/checks.hpp"

namespace {

using namespace shyang;
using yangian::Mode;
using yangian::YangianAlgebra;

void BM_CentralityN2(benchmark::State& state) {
  const auto r = static_cast<int>(state.range(0));
  const std::vector<Generator> probes{D1(1), D1(2), D2(1), D2(2), E(3), E(4), F(1), F(2)};
  for (auto _ : state) {
    const YangianAlgebra alg(2, Mode::Full);
    benchmark::DoNotOptimize(yangian::verify_centrality(alg, r, probes));
  }
}
BENCHMARK(BM_CentralityN2)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_NormalFormColdCache(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const YangianAlgebra alg(n, Mode::Full);
    const auto p = nc_pow(alg.gen(E(2 * n + 1)) + alg.gen(F(2)) + alg.gen(D2(1)), 3);
    benchmark::DoNotOptimize(alg.normal_form(p));
  }
}
BENCHMARK(BM_NormalFormColdCache)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_ConfluenceSamples(benchmark::State& state) {
  for (auto _ : state) {
    const YangianAlgebra alg(2, Mode::Full);
    benchmark::DoNotOptimize(yangian::confluence_check(alg, 8, 200, 42));
  }
}
BENCHMARK(BM_ConfluenceSamples)->Unit(benchmark::kMillisecond);

void BM_OverlapCheck(benchmark::State& state) {
  const auto mode = static_cast<Mode>(state.range(0));
  for (auto _ : state) {
    const YangianAlgebra alg(2, mode);
    benchmark::DoNotOptimize(yangian::overlap_check(alg, 12));
  }
}
BENCHMARK(BM_OverlapCheck)
    ->Arg(static_cast<int>(Mode::Full))
    ->Arg(static_cast<int>(Mode::TruncatedSO))
    ->Unit(benchmark::kMillisecond);

void BM_GradedDimensionSO(benchmark::State& state) {
  for (auto _ : state) {
    const YangianAlgebra alg(2, Mode::TruncatedSO);
    benchmark::DoNotOptimize(yangian::graded_dimension(alg, 10));
  }
}
BENCHMARK(BM_GradedDimensionSO)->Unit(benchmark::kMillisecond);

void BM_MolienDegrees(benchmark::State& state) {
  const auto type = static_cast<invariants::LieType>(state.range(0));
  const auto rank = static_cast<int>(state.range(1));
  const auto group = invariants::weyl_group_matrices(type, rank);
  for (auto _ : state) benchmark::DoNotOptimize(invariants::molien_degrees(group));
  state.SetLabel(invariants::type_name(type, rank));
}
BENCHMARK(BM_MolienDegrees)
    ->Args({static_cast<int>(invariants::LieType::F), 4})
    ->Args({static_cast<int>(invariants::LieType::D), 5})
    ->Args({static_cast<int>(invariants::LieType::E), 6})
    ->Unit(benchmark::kMillisecond);

void BM_KleinianJacobi(benchmark::State& state) {
  const auto ring = kleinian::build_kleinian(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kleinian::jacobi_check(ring, 8));
}
BENCHMARK(BM_KleinianJacobi)->Arg(2)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_PrintParseRoundTrip(benchmark::State& state) {
  const YangianAlgebra alg(2, Mode::Full);
  std::uint64_t seed = 42;
  std::vector<NCPolynomial> elements;
  for (int i = 0; i < 100; ++i) elements.push_back(yangian::random_element(alg, seed, 8, 4));
  for (auto _ : state) {
    for (const auto& p : elements) {
      benchmark::DoNotOptimize(exprio::elaborate_nc(exprio::parse(exprio::print(p)), alg));
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(elements.size()));
}
BENCHMARK(BM_PrintParseRoundTrip);

}  // namespace

BENCHMARK_MAIN();
