#include <benchmark/benchmark.h>

#include "qnr/link_budget.hpp"
#include "qnr/photon_statistics.hpp"
#include "qnr/waveform.hpp"

namespace {

void BM_Occupancy(benchmark::State& state) {
    double f = 1e8;
    for (auto _ : state) {
        benchmark::DoNotOptimize(qnr::occupancy(f, 290.0).n_b);
        f = f < 1e14 ? f * 1.0001 : 1e8;
    }
}
BENCHMARK(BM_Occupancy);

void BM_QrMaxRange(benchmark::State& state) {
    qnr::Scenario s = qnr::fig5_default_scenario();
    for (auto _ : state) {
        benchmark::DoNotOptimize(qnr::qr_max_range(s).r_max_m);
        s.dwell_s = s.dwell_s < 1.0 ? s.dwell_s * 1.01 : 1e-3;
    }
}
BENCHMARK(BM_QrMaxRange);

void BM_Fig5Dataset(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(qnr::fig5_dataset().rows.size());
    }
}
BENCHMARK(BM_Fig5Dataset);

void BM_GenerateGaussian(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(qnr::generate(qnr::WaveformKind::gaussian, m, seed++));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GenerateGaussian)->Range(1 << 12, 1 << 18);

void BM_Measure(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    const qnr::Waveform w = qnr::generate(qnr::WaveformKind::gaussian, m, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qnr::measure(w).psl_db);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Measure)->Range(1 << 12, 1 << 16);

void BM_MatchedFilter(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    const qnr::Waveform ref = qnr::generate(qnr::WaveformKind::gaussian, m, 2);
    std::vector<std::complex<double>> rx(2 * m);
    std::copy(ref.samples.begin(), ref.samples.end(), rx.begin() + m / 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qnr::matched_filter(rx, ref).size());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MatchedFilter)->Range(1 << 12, 1 << 16);

void BM_Tailor(benchmark::State& state) {
    const qnr::Waveform start = qnr::generate(qnr::WaveformKind::gaussian, 1 << 14, 3);
    qnr::TailorOptions options;
    options.papr_target = 1.5;
    options.band_fraction = 0.5;
    options.iterations = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qnr::tailor(start, options).iterations_used);
    }
}
BENCHMARK(BM_Tailor)->Arg(10)->Arg(50);

} // namespace

BENCHMARK_MAIN();
