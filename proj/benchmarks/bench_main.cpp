#include <benchmark/benchmark.h>

#include <pdokit/chebyshev.hpp>
#include <pdokit/multipoly.hpp>
#include <pdokit/partitions.hpp>
#include <pdokit/qfunctions.hpp>

namespace {

void BM_counting_series(benchmark::State& state) {
    const auto order = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(pdokit::pdo_counting_series(order));
}
BENCHMARK(BM_counting_series)->Arg(100)->Arg(400)->Arg(1000);

void BM_series_inverse(benchmark::State& state) {
    const auto order = static_cast<std::size_t>(state.range(0));
    const pdokit::IntSeries den = pdokit::eta_factor(1, order) *
                                  pdokit::eta_factor(3, order) *
                                  pdokit::eta_factor(12, order);
    for (auto _ : state) benchmark::DoNotOptimize(den.inverse());
}
BENCHMARK(BM_series_inverse)->Arg(200)->Arg(800);

void BM_polynomial_series_square(benchmark::State& state) {
    const auto order = static_cast<std::size_t>(state.range(0));
    const pdokit::PolySeries g = pdokit::g_series(pdokit::MultiPoly::x(), order);
    for (auto _ : state) benchmark::DoNotOptimize(g * g);
}
BENCHMARK(BM_polynomial_series_square)->Arg(100)->Arg(400);

void BM_extension_series_product(benchmark::State& state) {
    const auto order = static_cast<std::size_t>(state.range(0));
    const pdokit::ExtSeries gu = pdokit::g_series(pdokit::QuadExt::u(), order);
    const pdokit::ExtSeries gv = pdokit::g_series(pdokit::QuadExt::v(), order);
    for (auto _ : state) benchmark::DoNotOptimize(gu * gv);
}
BENCHMARK(BM_extension_series_product)->Arg(65)->Arg(130);

void BM_enumerate(benchmark::State& state) {
    const auto weight = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(pdokit::enumerate_pdo(weight));
}
BENCHMARK(BM_enumerate)->Arg(20)->Arg(30);

void BM_selection_table(benchmark::State& state) {
    const auto order = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(pdokit::ck_series_table(10, order));
}
BENCHMARK(BM_selection_table)->Arg(100)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
