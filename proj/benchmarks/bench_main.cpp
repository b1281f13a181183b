#include <benchmark/benchmark.h>

#include "quivergrass/dynkin.hpp"
#include "quivergrass/enumeration.hpp"
#include "quivergrass/euler.hpp"
#include "quivergrass/kronecker.hpp"
#include "quivergrass/sampler.hpp"
#include "quivergrass/subspace.hpp"

using namespace quivergrass;

static void BM_SubspaceStream(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  std::size_t n = 0;
  for (auto _ : state) {
    SubspaceStream stream(p, 5, 2);
    while (stream.next()) ++n;
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(n));
}
BENCHMARK(BM_SubspaceStream)->Arg(3)->Arg(7)->Arg(13);

static void BM_CountKronecker(benchmark::State& state) {
  const auto rep = reduce_mod(build_kronecker({KroneckerFamily::preprojective, 4, ProjectivePoint(0)}),
                              static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_subreps(rep, {2, 2}));
}
BENCHMARK(BM_CountKronecker)->Arg(5)->Arg(11)->Arg(23);

static void BM_CountBatched(benchmark::State& state) {
  const auto rep = reduce_mod(sample_general_rep(Quiver::linear(3), {2, 2, 2}, 3, 3), 7);
  const auto targets = box(rep.dims());
  for (auto _ : state) benchmark::DoNotOptimize(count_subreps_many(rep, targets));
}
BENCHMARK(BM_CountBatched);

static void BM_FPolynomialKronecker(benchmark::State& state) {
  const auto rep = build_kronecker({KroneckerFamily::regular, static_cast<int>(state.range(0)), ProjectivePoint(0)});
  for (auto _ : state) benchmark::DoNotOptimize(f_polynomial(rep));
}
BENCHMARK(BM_FPolynomialKronecker)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_GeneralizedMinor(benchmark::State& state) {
  const auto rs = RootSystem::make(DynkinType::A, static_cast<std::size_t>(state.range(0)));
  std::vector<std::size_t> letters(rs.rank());
  for (std::size_t i = 0; i < letters.size(); ++i) letters[i] = i;
  const CoxeterWord c(letters);
  const std::vector<int> root(rs.rank(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(f_polynomial_via_minor(rs, c, root));
}
BENCHMARK(BM_GeneralizedMinor)->Arg(2)->Arg(4)->Arg(6);

static void BM_Example4Witnesses(benchmark::State& state) {
  const auto rep = sample_general_rep(Quiver::kronecker(4), {3, 4}, 42);
  for (auto _ : state) benchmark::DoNotOptimize(example4_witnesses(rep, {5, 11, 13}));
}
BENCHMARK(BM_Example4Witnesses)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
