#include <benchmark/benchmark.h>

#include <random>

#include "tka/alexander.hpp"
#include "tka/factorize.hpp"
#include "tka/foxmilnor.hpp"
#include "tka/torsion.hpp"

using namespace tka;

namespace {

void BM_FactorUnivariate(benchmark::State& state) {
  const LaurentPoly p = pow(parse_laurent("t^4 - t^3 + t^2 - t + 1", 1), 2) * parse_laurent("2*t^3 - 3*t + 5", 1) *
                        parse_laurent("t^6 + t - 7", 1);
  for (auto _ : state) benchmark::DoNotOptimize(factor(p));
}
BENCHMARK(BM_FactorUnivariate);

void BM_FactorMultivariate(benchmark::State& state) {
  LaurentPoly p = LaurentPoly::constant(2, Integer(1));
  for (const char* f : {"2*t^3 - 3*x1^3*x2", "3*t^3 - 2*x1^3*x2", "3*t^3 + 3*t*x1*x2^2 - x1^3*x2^2", "t*x3 - x4 + 2"}) {
    p *= parse_laurent(f, 2);
  }
  for (auto _ : state) benchmark::DoNotOptimize(factor(p));
}
BENCHMARK(BM_FactorMultivariate);

void BM_AlexanderCorpus(benchmark::State& state) {
  for (auto _ : state) {
    for (const CorpusEntry& e : corpus()) benchmark::DoNotOptimize(alexander_poly(e.diagram));
  }
}
BENCHMARK(BM_AlexanderCorpus);

void BM_Torsion(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const BasedComplex c = random_acyclic_complex(rng, 1, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(torsion(c));
}
BENCHMARK(BM_Torsion)->Arg(1)->Arg(2);

void BM_FoxMilnor(benchmark::State& state) {
  const LaurentPoly q = parse_laurent("t*x1 - 2*x2 + 3", 1);
  const LaurentPoly p = parse_laurent("t^2 - 3*t + 1", 1);
  const LaurentPoly d0 = q * conj(q) * p;
  for (auto _ : state) benchmark::DoNotOptimize(fm_check(d0, p));
}
BENCHMARK(BM_FoxMilnor);

}  // namespace

BENCHMARK_MAIN();
