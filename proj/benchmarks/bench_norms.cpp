#include <benchmark/benchmark.h>

#include <random>

#include "twistlab/centralizer.hpp"
#include "twistlab/dual_norm.hpp"
#include "twistlab/norms.hpp"
#include "twistlab/real_vector.hpp"
#include "twistlab/tsirelson.hpp"

using namespace twistlab;

namespace {

RealVector dense_random(int dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> val(0.0, 1.0);
    std::vector<double> v(dim);
    for (auto& x : v) x = val(rng);
    return RealVector::from_dense(v);
}

void bm_schreier_norm(benchmark::State& state) {
    auto x = dense_random(static_cast<int>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(schreier_norm(x));
}
BENCHMARK(bm_schreier_norm)->Arg(8)->Arg(64)->Arg(512);

void bm_convexified_schreier(benchmark::State& state) {
    auto s2 = SpaceSpec::convexify2(SpaceSpec::schreier());
    auto x = dense_random(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(norm(s2, x));
}
BENCHMARK(bm_convexified_schreier)->Arg(8)->Arg(64)->Arg(512);

void bm_tsirelson_norm(benchmark::State& state) {
    auto x = dense_random(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(tsirelson_norm(x));
}
BENCHMARK(bm_tsirelson_norm)->Arg(6)->Arg(10)->Arg(14);

void bm_dual_norm_s2(benchmark::State& state) {
    auto s2 = SpaceSpec::convexify2(SpaceSpec::schreier());
    auto y = dense_random(static_cast<int>(state.range(0)), 4).abs();
    for (auto _ : state) benchmark::DoNotOptimize(dual_norm(s2, y).value);
}
BENCHMARK(bm_dual_norm_s2)->Arg(4)->Arg(8)->Arg(12);

void bm_kalton_peck(benchmark::State& state) {
    auto y = dense_random(static_cast<int>(state.range(0)), 5);
    for (auto _ : state) benchmark::DoNotOptimize(kalton_peck(y));
}
BENCHMARK(bm_kalton_peck)->Arg(64)->Arg(4096);

void bm_couple_centralizer_lp(benchmark::State& state) {
    auto y = dense_random(static_cast<int>(state.range(0)), 6);
    y = y.scaled(1.0 / y.l2_norm());
    auto space = SpaceSpec::lp(1.5);
    for (auto _ : state) benchmark::DoNotOptimize(couple_centralizer(space, y, 1e-6));
}
BENCHMARK(bm_couple_centralizer_lp)->Arg(8)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
