#include <benchmark/benchmark.h>

#include "bitlet/config.hpp"
#include "bitlet/emit.hpp"
#include "bitlet/engine.hpp"
#include "bitlet/scenarios.hpp"
#include "bitlet/sweep.hpp"

using namespace bitlet;

namespace {

WorkloadProfile add16() {
    WorkloadProfile w;
    w.oc = 144;
    w.dio_cpu = 48;
    w.dio_combined = 16;
    return w;
}

void BM_Evaluate(benchmark::State& state) {
    const MachineConfig m;
    auto w = add16();
    for (auto _ : state) {
        w.oc += 1;
        benchmark::DoNotOptimize(engine::evaluate(m, w));
    }
}
BENCHMARK(BM_Evaluate);

void BM_GridSweep(benchmark::State& state) {
    const auto n = static_cast<int>(state.range(0));
    const std::vector<sweep::AxisSpec> axes{{sweep::AxisParam::Cc, 10, 1e5, n, sweep::Scale::Log, {}},
                                            {sweep::AxisParam::DioCombined, 1, 256, n, sweep::Scale::Log, {}}};
    for (auto _ : state) benchmark::DoNotOptimize(sweep::grid_sweep(MachineConfig{}, add16(), axes));
    state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_GridSweep)->Arg(16)->Arg(64)->Arg(256);

void BM_IsoLine(benchmark::State& state) {
    const MachineConfig m;
    for (auto _ : state) benchmark::DoNotOptimize(sweep::iso_line_cc_dio(m, Metric::TpCombinedGops, 62));
}
BENCHMARK(BM_IsoLine);

void BM_Crossover(benchmark::State& state) {
    std::vector<double> bw(256);
    for (std::size_t i = 0; i < bw.size(); ++i) bw[i] = 100e9 * static_cast<double>(i + 1);
    for (auto _ : state) benchmark::DoNotOptimize(sweep::crossover_xbs_bw(MachineConfig{}, 6400, 48, 16, bw));
}
BENCHMARK(BM_Crossover);

void BM_AllScenarios(benchmark::State& state) {
    for (auto _ : state)
        for (const auto& s : scenarios::list_scenarios()) benchmark::DoNotOptimize(scenarios::run_scenario(s));
}
BENCHMARK(BM_AllScenarios);

void BM_ParseConfig(benchmark::State& state) {
    const std::string text = R"({"machine": {"xbs": 65536, "cycle_time": "1.1ns", "ebit_pim": "0.29fJ", "bw": "1000Gbps"},
        "workload": {"complexity": {"op": "ADD", "width": 16, "layout": "gathered_unaligned"},
                     "usecase": {"kind": "compact", "s": 48, "s1": 16}, "n": 1000000}})";
    for (auto _ : state) benchmark::DoNotOptimize(config::parse_config(text));
}
BENCHMARK(BM_ParseConfig);

void BM_EmitCsv(benchmark::State& state) {
    std::vector<emit::NamedResult> rows;
    for (int i = 0; i < 64; ++i) {
        auto w = add16();
        w.oc = 32 + 100 * i;
        rows.push_back(emit::evaluate_named("cfg" + std::to_string(i), MachineConfig{}, w));
    }
    for (auto _ : state) benchmark::DoNotOptimize(emit::emit_table(rows, emit::Format::Csv));
}
BENCHMARK(BM_EmitCsv);

}  // namespace
BENCHMARK_MAIN();
