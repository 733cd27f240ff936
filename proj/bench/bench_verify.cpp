// Serial against OpenMP runs of the numeric batteries.
#include "bandlab/verify.hpp"

#include <benchmark/benchmark.h>

using namespace bandlab;

static void run_kind(benchmark::State& st, const char* kind, bool parallel) {
    const VerifyOptions o{static_cast<int>(st.range(0)), 32, 11, parallel};
    for (auto _ : st) {
        Report r = verify_kind(kind, o);
        if (!r.ok()) st.SkipWithError("check failed");
        benchmark::DoNotOptimize(r.instances);
    }
}

static void BM_tsystem_serial(benchmark::State& st) { run_kind(st, "tsystem", false); }
static void BM_tsystem_parallel(benchmark::State& st) { run_kind(st, "tsystem", true); }
static void BM_fz_serial(benchmark::State& st) { run_kind(st, "fz-minor", false); }
static void BM_fz_parallel(benchmark::State& st) { run_kind(st, "fz-minor", true); }
static void BM_theta_poly_serial(benchmark::State& st) { run_kind(st, "theta-poly", false); }
static void BM_theta_poly_parallel(benchmark::State& st) { run_kind(st, "theta-poly", true); }

BENCHMARK(BM_tsystem_serial)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_tsystem_parallel)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_fz_serial)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_fz_parallel)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_theta_poly_serial)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_theta_poly_parallel)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
