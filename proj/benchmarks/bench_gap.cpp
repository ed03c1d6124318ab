#include <benchmark/benchmark.h>

#include "aritygap/enumerate.hpp"
#include "aritygap/fnalg.hpp"
#include "aritygap/oracle.hpp"

namespace {

using namespace aritygap;

// Fully essential four-variable inputs keep both sides on their slow path.
FiniteFunction parity4() {
  return FiniteFunction::tabulate(
      Carrier::boolean(), 4, Codomain::carrier(Carrier::boolean()),
      [](std::span<const std::size_t> t) {
        return Rational(static_cast<std::int64_t>((t[0] + t[1] + t[2] + t[3]) % 2));
      });
}

FiniteFunction threshold4() {
  return FiniteFunction::tabulate(
      Carrier::boolean(), 4, Codomain::carrier(Carrier::boolean()),
      [](std::span<const std::size_t> t) {
        return Rational(static_cast<std::int64_t>(t[0] + t[1] + t[2] + t[3] >= 2 ? 1 : 0));
      });
}

void BM_oracle_gap(benchmark::State& state) {
  const FiniteFunction f = state.range(0) == 0 ? parity4() : threshold4();
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::oracle_gap(f));
  }
}
BENCHMARK(BM_oracle_gap)->Arg(0)->Arg(1);

void BM_characterization(benchmark::State& state) {
  const FiniteFunction f = state.range(0) == 0 ? parity4() : threshold4();
  for (auto _ : state) {
    benchmark::DoNotOptimize(gap_via_characterization(f));
  }
}
BENCHMARK(BM_characterization)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
