#include <benchmark/benchmark.h>

#include "aritygap/boolfn.hpp"
#include "aritygap/enumerate.hpp"

namespace {

using namespace aritygap;

SetFunction random_set_function(std::size_t n, std::uint64_t seed) {
  SplitMix64 rng = sample_stream(seed, 0);
  SetFunction v{n, std::vector<Rational>(std::size_t(1) << n)};
  for (Rational& r : v.values) {
    r = Rational(static_cast<std::int64_t>(rng.below(9)) - 4,
                 static_cast<std::int64_t>(rng.below(4)) + 1);
  }
  return v;
}

void BM_mobius(benchmark::State& state) {
  const SetFunction v = random_set_function(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mobius(v));
  }
}
BENCHMARK(BM_mobius)->Arg(8)->Arg(12)->Arg(16);

void BM_zeta(benchmark::State& state) {
  const SetFunction v = random_set_function(static_cast<std::size_t>(state.range(0)), 11);
  const MobiusCoefficients m = mobius(v);
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeta(m));
  }
}
BENCHMARK(BM_zeta)->Arg(8)->Arg(12)->Arg(16);

}  // namespace
