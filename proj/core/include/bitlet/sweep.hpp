#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "bitlet/engine.hpp"
#include "bitlet/metrics.hpp"

namespace bitlet::sweep {

enum class AxisParam { Cc, DioCombined, DioCpu, Xbs, Rows, Bw, Ct, EbitPim, EbitCpu };
enum class Scale { Linear, Log };

/// One sweep axis. Values are in SI units (bits/s, seconds, joules). When
/// `explicit_values` is non-empty it replaces min/max/points/scale.
struct AxisSpec {
    AxisParam param = AxisParam::Cc;
    double min = 1;
    double max = 2;
    int points = 256;
    Scale scale = Scale::Log;
    std::vector<double> explicit_values;

    bool operator==(const AxisSpec&) const = default;
};

void validate(const AxisSpec& axis);
/// Sample coordinates; the last sample is exactly `max`.
[[nodiscard]] std::vector<double> axis_values(const AxisSpec& axis);
/// Sets one parameter. Setting cc puts the whole value in oc and zeroes pac.
void apply(AxisParam param, double value, MachineConfig& m, WorkloadProfile& w);

[[nodiscard]] std::string_view to_string(AxisParam p);
[[nodiscard]] std::optional<AxisParam> parse_axis_param(std::string_view s);

struct SweepGrid {
    std::vector<AxisSpec> axes;
    std::vector<std::vector<double>> coords;  // per axis
    std::vector<Metric> metrics;
    std::vector<engine::EvalResult> cells;    // row-major, first axis outer
    std::vector<MachineConfig> machines;      // resolved inputs per cell
    std::vector<WorkloadProfile> workloads;

    [[nodiscard]] std::size_t size() const noexcept { return cells.size(); }
    [[nodiscard]] double value(std::size_t cell, Metric metric) const;
};

/// Evaluates the engine at every grid point (1 or 2 axes).
[[nodiscard]] SweepGrid grid_sweep(const MachineConfig& base_machine, const WorkloadProfile& base_workload,
                                   std::vector<AxisSpec> axes, std::vector<Metric> metrics = {});

// --- (CC, DIO) plane level sets --------------------------------------------

struct PlanePoint {
    double cc = 0;
    double dio = 0;
};

/// Visible window of the (CC, DIO) plane; defaults follow the usual
/// sensitivity plot ranges.
struct PlaneWindow {
    double cc_min = 10;
    double cc_max = 1e5;
    double dio_min = 1;
    double dio_max = 256;
    int points = 256;

    bool operator==(const PlaneWindow&) const = default;
};

/// A straight level set  cc_coef * cc + dio_coef * dio = rhs  plus samples.
struct IsoLine {
    Metric metric = Metric::TpCombinedGops;
    double level = 0;  // in the metric's reporting units
    double cc_coef = 0;
    double dio_coef = 0;
    double rhs = 0;
    std::vector<PlanePoint> samples;
};

/// metric is TpCombinedGops (level in GOPS) or PCombinedW (level in W).
/// Throughput lines are sampled along the whole segment between the two axis
/// intercepts; power lines are rays from the origin sampled log-uniformly in
/// the window.
[[nodiscard]] IsoLine iso_line_cc_dio(const MachineConfig& m, Metric metric, double level,
                                      const PlaneWindow& window = {});

// --- (XBs, BW) crossover ------------------------------------------------------

struct CrossoverPoint {
    double bw = 0;
    std::optional<double> xbs_throughput;  // CPU-pure throughput == combined throughput
    std::optional<double> xbs_power;       // CPU-pure power == combined power
};

struct CrossoverCurve {
    double cc = 0;
    double dio_cpu = 0;
    double dio_combined = 0;
    bool cpu_pure_dominates = false;  // combined can never catch up in throughput
    std::vector<CrossoverPoint> points;
};

[[nodiscard]] CrossoverCurve crossover_xbs_bw(const MachineConfig& machine, double cc, double dio_cpu,
                                              double dio_combined, const std::vector<double>& bw_samples);

enum class Region { CpuPureBetter, CombinedBetter };

/// Direct evaluation at (xbs, bw): combined strictly faster -> CombinedBetter.
[[nodiscard]] Region classify_throughput(MachineConfig machine, double cc, double dio_cpu, double dio_combined,
                                         double xbs, double bw);

}  // namespace bitlet::sweep
