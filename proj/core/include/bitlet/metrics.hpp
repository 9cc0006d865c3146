#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "bitlet/engine.hpp"

namespace bitlet {

/// Scalar projections of an evaluation, in reporting units.
enum class Metric {
    TpPimGops,
    TpCpuGops,
    TpCombinedGops,
    PPimW,
    PCpuW,
    PCombinedW,
    EpcPimJgop,
    EpcCpuJgop,
    EpcCombinedJgop,
    // derived / auxiliary
    TpCpuSideGops,
    OpsPerCycle,
    GopsPerWattPim,
    CcCycles,
    DioCpuBits,
    DioCombinedBits,
    DutyPim,
    DutyCpu,
    ThrottleFactorPim,
    ThrottleFactorCpu,
};

/// The nine primary outputs, in the fixed CSV/JSON column order.
[[nodiscard]] std::span<const Metric> primary_metrics();
[[nodiscard]] std::span<const Metric> all_metrics();

[[nodiscard]] std::string_view metric_id(Metric m);
[[nodiscard]] std::optional<Metric> parse_metric(std::string_view id);

[[nodiscard]] double metric_value(Metric metric, const MachineConfig& m, const WorkloadProfile& w,
                                  const engine::EvalResult& r);

}  // namespace bitlet
