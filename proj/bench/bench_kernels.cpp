// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "steenrod/text.hpp"
#include "steenrod/verify.hpp"

using namespace steenrod;

namespace {

// dense operands whose product has a few thousand terms
std::pair<Polynomial, Polynomial> operands(int size)
{
    Prime p(7);
    std::string e = std::to_string(size);
    return {parse_polynomial("(y1 + 2*y2 + 3*y3 + x1 + x2*y3 + 1)^" + e, 3, p),
            parse_polynomial("(y1^2 - y2 + y3 + x3 + 5)^" + e, 3, p)};
}

void BM_PolyMulSerial(benchmark::State& state)
{
    auto [f, g] = operands(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(poly_mul(f, g));
    state.counters["terms"] = static_cast<double>(f.size() * g.size());
}

void BM_PolyMulParallel(benchmark::State& state)
{
    auto [f, g] = operands(static_cast<int>(state.range(0)));
    const int threads = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(poly_mul_parallel(f, g, threads));
    state.counters["terms"] = static_cast<double>(f.size() * g.size());
}

void BM_VerifySuite(benchmark::State& state)
{
    const Prime p(static_cast<std::uint32_t>(state.range(0)));
    SuiteOptions opts;
    opts.jobs = static_cast<int>(state.range(1));
    std::set<TheoremId> all(all_theorems().begin(), all_theorems().end());
    std::size_t cases = 0;
    for (auto _ : state) {
        auto reports = verify_suite(p, all, opts);
        cases = reports.size();
        benchmark::DoNotOptimize(reports.data());
    }
    state.counters["cases"] = static_cast<double>(cases);
}

}  // namespace

BENCHMARK(BM_PolyMulSerial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PolyMulParallel)->ArgsProduct({{4, 6}, {2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_VerifySuite)->ArgsProduct({{5, 7}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
