#include <benchmark/benchmark.h>

#include "esymlab/aggregates.hpp"
#include "esymlab/expr.hpp"
#include "esymlab/modlab.hpp"
#include "esymlab/prelab.hpp"
#include "esymlab/sequences.hpp"

namespace {

using namespace esymlab;

void BM_EnumeratePartitions(benchmark::State& state) {
    const auto n = static_cast<Part>(state.range(0));
    for (auto _ : state) {
        std::size_t count = 0;
        for_each_partition(n, PartSource::all(), LengthConstraint::any(), [&](const Partition&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumeratePartitions)->Arg(40)->Arg(60);

void BM_EjpBruteforce(benchmark::State& state) {
    const auto n = static_cast<Part>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ejp_bruteforce(n, 3, PartSource::all(), LengthConstraint::any()));
}
BENCHMARK(BM_EjpBruteforce)->Arg(40)->Arg(60);

void BM_EjpDp(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(ejp_dp(n, 2, PartSource::all(), LengthConstraint::exactly(4)));
}
BENCHMARK(BM_EjpDp)->Arg(600)->Unit(benchmark::kMillisecond);

void BM_ExtendAndDetect(benchmark::State& state) {
    const BigSeq prefix = compute_sequence("e2p4", {}, 600);
    const auto m = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        const ResidueSeq r = extend_mod(prefix, LinRecurrence::e2p4(), m, 5000);
        benchmark::DoNotOptimize(detect_period(r).period);
    }
}
BENCHMARK(BM_ExtendAndDetect)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_SeriesIdentity(benchmark::State& state) {
    const auto expr = parse_expr("(q^10+q^8+q^6)/((1-q^3)^2*(1-q^6)^2)+2*(q^9+q^8+q^7)/((1-q^6)*(1-q^3)^3)");
    for (auto _ : state) benchmark::DoNotOptimize(eval_expr(expr, 300, Ring::mod(3)));
}
BENCHMARK(BM_SeriesIdentity)->Unit(benchmark::kMillisecond);

void BM_ImageSet(benchmark::State& state) {
    const auto n = static_cast<Part>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(image_set(n, 2, PartSource::all()).size());
}
BENCHMARK(BM_ImageSet)->Arg(28)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
