#include <benchmark/benchmark.h>

#include "cforge/cretan.hpp"

using namespace cforge;

namespace {

HadamardMatrix generator_for(std::size_t t) {
    const std::size_t q = 4 * t - 1;
    if (is_prime(q) && q % 4 == 3) return paley_hadamard(q);
    unsigned k = 0;
    for (std::size_t m = 4 * t; m > 1; m >>= 1) ++k;
    return sylvester(k);
}

void BM_ExactGram(benchmark::State& state) {
    const auto t = static_cast<std::size_t>(state.range(0));
    const Design core = core_to_sbibd(generator_for(t));
    const CretanMatrix s = cretan_from_sbibd(core, LevelConvention::x_on_zeros);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gram(s.matrix()));
    }
    state.SetComplexityN(static_cast<long long>(s.order()));
}
BENCHMARK(BM_ExactGram)->Arg(2)->Arg(5)->Arg(11)->Arg(21)->Complexity(benchmark::oNCubed);

void BM_HadamardDet(benchmark::State& state) {
    const auto t = static_cast<std::size_t>(state.range(0));
    const HadamardMatrix h = generator_for(t);
    const ExactMatrix m = h.exact();
    for (auto _ : state) {
        benchmark::DoNotOptimize(det(m));
    }
    state.SetComplexityN(static_cast<long long>(h.order()));
}
BENCHMARK(BM_HadamardDet)->Arg(2)->Arg(5)->Arg(11)->Arg(21)->Complexity(benchmark::oNCubed);

void BM_SolveLevels(benchmark::State& state) {
    const auto t = static_cast<std::size_t>(state.range(0));
    const TwoLevelPattern p(core_to_sbibd(generator_for(t)).complement());
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_levels(p));
    }
}
BENCHMARK(BM_SolveLevels)->Arg(2)->Arg(11)->Arg(21);

void BM_RoundTrip(benchmark::State& state) {
    const auto t = static_cast<std::size_t>(state.range(0));
    const HadamardMatrix h = generator_for(t);
    for (auto _ : state) {
        benchmark::DoNotOptimize(roundtrip(h));
    }
}
BENCHMARK(BM_RoundTrip)->Arg(2)->Arg(5)->Arg(11);

} // namespace

BENCHMARK_MAIN();
