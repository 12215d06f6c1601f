#include <saito/cohomology.hpp>

#include <benchmark/benchmark.h>

using namespace saito;

static void BM_PolynomialProduct(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const int deg = static_cast<int>(state.range(0));
    const Polynomial a = random_polynomial(rng, 3, deg), b = random_polynomial(rng, 3, deg);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolynomialProduct)->Arg(4)->Arg(8)->Arg(16);

static void BM_EnvelopingProduct(benchmark::State& state) {
    const unsigned r = static_cast<unsigned>(state.range(0));
    Enveloping u(build_family({Family::wreath, 3, r}).basis);
    std::mt19937_64 rng(2);
    const UElement a = random_element(rng, u, 2, 2), b = random_element(rng, u, 2, 2);
    for (auto _ : state) benchmark::DoNotOptimize(u.mul(a, b));
}
BENCHMARK(BM_EnvelopingProduct)->Arg(1)->Arg(2);

// Fresh algebra each iteration so the product caches start cold.
static void BM_H1Slice(benchmark::State& state) {
    const int weight = static_cast<int>(state.range(0));
    const auto basis = build_family({Family::wreath, 3, 1}).basis;
    Bounds b;
    b.max_order = 3;
    b.weight_lo = b.weight_hi = weight;
    for (auto _ : state) {
        Enveloping u(basis);
        benchmark::DoNotOptimize(h_su_dims(u, 1, b));
    }
}
BENCHMARK(BM_H1Slice)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_CokerRow(benchmark::State& state) {
    const auto basis = build_family({Family::wreath, 3, 2}).basis;
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(coker_saito_dims(basis, d, d));
}
BENCHMARK(BM_CokerRow)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
