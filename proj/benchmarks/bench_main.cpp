#include <benchmark/benchmark.h>

#include "genus_forge/coadjoint.hpp"
#include "genus_forge/localization.hpp"
#include "genus_forge/modular.hpp"
#include "genus_forge/symfunc.hpp"

namespace gf = genus_forge;

namespace {

void BM_CyclotomicInverse(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  gf::Cyclotomic x(N, gf::Rational{3});
  for (int j = 1; j < N; ++j) x += gf::Cyclotomic::zeta(N, j) * gf::Rational(j, j + 2);
  for (auto _ : state) benchmark::DoNotOptimize(x.inverse());
}
BENCHMARK(BM_CyclotomicInverse)->Arg(3)->Arg(7)->Arg(12)->Arg(23);

void BM_SeriesInverse(benchmark::State& state) {
  gf::RatSeries s("q", state.range(0), gf::Rational{1});
  for (long e = 0; e < state.range(0); ++e) s.set(e, gf::Rational(e + 1, e + 2));
  for (auto _ : state) benchmark::DoNotOptimize(s.inverse());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SeriesInverse)->RangeMultiplier(2)->Range(8, 128)->Complexity();

// Not memoized, unlike the Fourier side.
void BM_QnProduct(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(gf::qn_expansion_via_product(static_cast<int>(state.range(0)), 7, state.range(1)));
}
BENCHMARK(BM_QnProduct)->Args({3, 8})->Args({3, 16})->Args({4, 16})->Unit(benchmark::kMillisecond);

void BM_VerifyRelation(benchmark::State& state) {
  const auto cp3 = gf::cpn_fixed_points({1, 2, 5});
  const gf::Relation rel = gf::build_relation(cp3, 4, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gf::verify_relation(rel, 16));
}
BENCHMARK(BM_VerifyRelation)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_MonomialExpansion(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const gf::Partition I({3, 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(gf::monomial_symmetric(I, n));
}
BENCHMARK(BM_MonomialExpansion)->DenseRange(3, 6);

void BM_CrosscheckGrassmannian(benchmark::State& state) {
  const gf::OrbitSpec orbit = gf::grassmannian_orbit(3);
  const std::vector<long> xi{7, 3, 1};
  for (auto _ : state) benchmark::DoNotOptimize(gf::crosscheck_qI(orbit, gf::Partition({4, 2, 1}), xi));
}
BENCHMARK(BM_CrosscheckGrassmannian)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
