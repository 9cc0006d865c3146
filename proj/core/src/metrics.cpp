#include "bitlet/metrics.hpp"

#include <array>
#include <utility>

namespace bitlet {

namespace {

constexpr std::array<std::pair<Metric, std::string_view>, 19> kMetricIds{{
    {Metric::TpPimGops, "tp_pim_gops"},
    {Metric::TpCpuGops, "tp_cpu_gops"},
    {Metric::TpCombinedGops, "tp_combined_gops"},
    {Metric::PPimW, "p_pim_w"},
    {Metric::PCpuW, "p_cpu_w"},
    {Metric::PCombinedW, "p_combined_w"},
    {Metric::EpcPimJgop, "epc_pim_jgop"},
    {Metric::EpcCpuJgop, "epc_cpu_jgop"},
    {Metric::EpcCombinedJgop, "epc_combined_jgop"},
    {Metric::TpCpuSideGops, "tp_cpu_side_gops"},
    {Metric::OpsPerCycle, "ops_per_cycle"},
    {Metric::GopsPerWattPim, "gops_per_watt_pim"},
    {Metric::CcCycles, "cc_cycles"},
    {Metric::DioCpuBits, "dio_cpu_bits"},
    {Metric::DioCombinedBits, "dio_combined_bits"},
    {Metric::DutyPim, "duty_pim"},
    {Metric::DutyCpu, "duty_cpu"},
    {Metric::ThrottleFactorPim, "throttle_factor_pim"},
    {Metric::ThrottleFactorCpu, "throttle_factor_cpu"},
}};

constexpr std::array<Metric, 9> kPrimary{
    Metric::TpPimGops,  Metric::TpCpuGops,  Metric::TpCombinedGops,
    Metric::PPimW,      Metric::PCpuW,      Metric::PCombinedW,
    Metric::EpcPimJgop, Metric::EpcCpuJgop, Metric::EpcCombinedJgop,
};

constexpr auto kAll = [] {
    std::array<Metric, kMetricIds.size()> out{};
    for (std::size_t i = 0; i < kMetricIds.size(); ++i) out[i] = kMetricIds[i].first;
    return out;
}();

}  // namespace

std::span<const Metric> primary_metrics() { return kPrimary; }
std::span<const Metric> all_metrics() { return kAll; }

std::string_view metric_id(Metric m) {
    for (const auto& [metric, id] : kMetricIds)
        if (metric == m) return id;
    return "?";
}

std::optional<Metric> parse_metric(std::string_view id) {
    for (const auto& [metric, name] : kMetricIds)
        if (name == id) return metric;
    return std::nullopt;
}

double metric_value(Metric metric, const MachineConfig& m, const WorkloadProfile& w,
                    const engine::EvalResult& r) {
    switch (metric) {
        case Metric::TpPimGops: return to_gops(r.tp_pim);
        case Metric::TpCpuGops: return to_gops(r.tp_cpu);
        case Metric::TpCombinedGops: return to_gops(r.tp_combined);
        case Metric::PPimW: return r.p_pim;
        case Metric::PCpuW: return r.p_cpu;
        case Metric::PCombinedW: return r.p_combined;
        case Metric::EpcPimJgop: return to_j_per_gop(r.epc_pim);
        case Metric::EpcCpuJgop: return to_j_per_gop(r.epc_cpu);
        case Metric::EpcCombinedJgop: return to_j_per_gop(r.epc_combined);
        case Metric::TpCpuSideGops: return to_gops(r.tp_cpu_side);
        case Metric::OpsPerCycle: return r.tp_pim * m.cycle_time;
        case Metric::GopsPerWattPim: return to_gops(r.tp_pim) / r.p_pim;
        case Metric::CcCycles: return w.cc();
        case Metric::DioCpuBits: return w.dio_cpu;
        case Metric::DioCombinedBits: return w.dio_combined;
        case Metric::DutyPim: return r.duty_pim;
        case Metric::DutyCpu: return r.duty_cpu;
        case Metric::ThrottleFactorPim: return r.throttle_factor_pim;
        case Metric::ThrottleFactorCpu: return r.throttle_factor_cpu;
    }
    return 0;
}

}  // namespace bitlet
