#include "bitlet/sweep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

namespace bitlet::sweep {

namespace {

constexpr std::array<std::pair<AxisParam, std::string_view>, 9> kAxisNames{{
    {AxisParam::Cc, "cc"},
    {AxisParam::DioCombined, "dio_combined"},
    {AxisParam::DioCpu, "dio_cpu"},
    {AxisParam::Xbs, "xbs"},
    {AxisParam::Rows, "rows"},
    {AxisParam::Bw, "bw"},
    {AxisParam::Ct, "ct"},
    {AxisParam::EbitPim, "ebit_pim"},
    {AxisParam::EbitCpu, "ebit_cpu"},
}};

std::vector<double> spaced(double lo, double hi, int n, Scale scale) {
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / (n - 1);
        out[static_cast<std::size_t>(i)] =
            scale == Scale::Log ? lo * std::pow(hi / lo, t) : lo + (hi - lo) * t;
    }
    out.front() = lo;
    out.back() = hi;
    return out;
}

}  // namespace

void validate(const AxisSpec& axis) {
    if (!axis.explicit_values.empty()) {
        for (double v : axis.explicit_values)
            if (!std::isfinite(v)) throw ValidationError("axis", "axis values must be finite");
        return;
    }
    if (axis.points < 2) throw ValidationError("points", "an axis needs at least 2 points");
    if (!std::isfinite(axis.min) || !std::isfinite(axis.max) || !(axis.min < axis.max))
        throw ValidationError("axis", "axis min must be < max");
    if (axis.scale == Scale::Log && !(axis.min > 0))
        throw ValidationError("axis", "log-scale axis requires min > 0");
}

std::vector<double> axis_values(const AxisSpec& axis) {
    validate(axis);
    if (!axis.explicit_values.empty()) return axis.explicit_values;
    return spaced(axis.min, axis.max, axis.points, axis.scale);
}

void apply(AxisParam param, double value, MachineConfig& m, WorkloadProfile& w) {
    switch (param) {
        case AxisParam::Cc:
            w.oc = value;
            w.pac = 0;
            break;
        case AxisParam::DioCombined: w.dio_combined = value; break;
        case AxisParam::DioCpu: w.dio_cpu = value; break;
        case AxisParam::Xbs: m.xbs = value; break;
        case AxisParam::Rows: m.rows = value; break;
        case AxisParam::Bw: m.bw = value; break;
        case AxisParam::Ct: m.cycle_time = value; break;
        case AxisParam::EbitPim: m.ebit_pim = value; break;
        case AxisParam::EbitCpu: m.ebit_cpu = value; break;
    }
}

std::string_view to_string(AxisParam p) {
    for (const auto& [param, name] : kAxisNames)
        if (param == p) return name;
    return "?";
}

std::optional<AxisParam> parse_axis_param(std::string_view s) {
    for (const auto& [param, name] : kAxisNames)
        if (name == s) return param;
    return std::nullopt;
}

double SweepGrid::value(std::size_t cell, Metric metric) const {
    return metric_value(metric, machines.at(cell), workloads.at(cell), cells.at(cell));
}

SweepGrid grid_sweep(const MachineConfig& base_machine, const WorkloadProfile& base_workload,
                     std::vector<AxisSpec> axes, std::vector<Metric> metrics) {
    if (axes.empty() || axes.size() > 2) throw ValidationError("axes", "a sweep takes 1 or 2 axes");
    if (axes.size() == 2 && axes[0].param == axes[1].param)
        throw ValidationError("axes", "sweep axes must differ");

    SweepGrid grid;
    for (const auto& a : axes) grid.coords.push_back(axis_values(a));
    grid.axes = std::move(axes);
    if (metrics.empty()) metrics.assign(primary_metrics().begin(), primary_metrics().end());
    grid.metrics = std::move(metrics);

    const std::size_t outer = grid.coords[0].size();
    const std::size_t inner = grid.coords.size() == 2 ? grid.coords[1].size() : 1;
    grid.cells.reserve(outer * inner);
    for (std::size_t i = 0; i < outer; ++i) {
        for (std::size_t j = 0; j < inner; ++j) {
            MachineConfig m = base_machine;
            WorkloadProfile w = base_workload;
            apply(grid.axes[0].param, grid.coords[0][i], m, w);
            if (grid.coords.size() == 2) apply(grid.axes[1].param, grid.coords[1][j], m, w);
            grid.cells.push_back(engine::evaluate(m, w));
            grid.machines.push_back(m);
            grid.workloads.push_back(std::move(w));
        }
    }
    return grid;
}

IsoLine iso_line_cc_dio(const MachineConfig& m, Metric metric, double level, const PlaneWindow& window) {
    validate_machine(m);
    if (window.points < 2) throw ValidationError("points", "need at least 2 samples");
    if (!(window.cc_min > 0 && window.cc_min < window.cc_max && window.dio_min > 0 && window.dio_min < window.dio_max))
        throw ValidationError("window", "plane window must be positive and non-empty");

    // Seconds per computation: cc * pim_time + dio * bus_time.
    const double n = m.xbs * m.rows;
    const double pim_time = m.cycle_time / n;
    const double bus_time = 1.0 / m.bw;

    IsoLine line;
    line.metric = metric;
    line.level = level;
    const auto count = static_cast<std::size_t>(window.points);

    if (metric == Metric::TpCombinedGops) {
        if (!(level > 0) || !std::isfinite(level)) throw ValidationError("level", "throughput level must be > 0");
        const double t = from_gops(level);
        line.cc_coef = pim_time;
        line.dio_coef = bus_time;
        line.rhs = 1.0 / t;
        const double cc_intercept = line.rhs / pim_time;
        for (std::size_t i = 0; i < count; ++i) {
            const double cc = cc_intercept * static_cast<double>(i) / static_cast<double>(count - 1);
            const double dio = i + 1 == count ? 0.0 : (line.rhs - cc * pim_time) / bus_time;
            line.samples.push_back({cc, dio});
        }
        return line;
    }

    if (metric != Metric::PCombinedW) throw ValidationError("metric", "iso-lines exist for tp_combined_gops and p_combined_w");
    if (!std::isfinite(level)) throw ValidationError("level", "power level must be finite");

    // P = (ebit_pim*cc + ebit_cpu*dio) / (pim_time*cc + bus_time*dio)
    //  => (ebit_pim - P*pim_time)*cc + (ebit_cpu - P*bus_time)*dio = 0
    const double pp = m.ebit_pim / pim_time;
    const double pc = m.ebit_cpu / bus_time;
    const double lo = std::min(pp, pc);
    const double hi = std::max(pp, pc);
    if (lo == hi) {
        throw ValidationError("level", level == lo ? "unachievable/degenerate level: every point has this power"
                                                   : "unachievable/degenerate level: power is constant");
    }
    if (level < lo || level > hi)
        throw ValidationError("level", "unachievable level: combined power lies between PIM and CPU power");

    line.cc_coef = m.ebit_pim - level * pim_time;
    line.dio_coef = m.ebit_cpu - level * bus_time;
    line.rhs = 0;

    if (level == pc) {
        // cc = 0 axis: sample dio.
        for (double dio : spaced(window.dio_min, window.dio_max, window.points, Scale::Log)) line.samples.push_back({0, dio});
        return line;
    }
    const double slope = level == pp ? 0.0 : -line.cc_coef / line.dio_coef;
    for (double cc : spaced(window.cc_min, window.cc_max, window.points, Scale::Log))
        line.samples.push_back({cc, slope * cc});
    return line;
}

CrossoverCurve crossover_xbs_bw(const MachineConfig& machine, double cc, double dio_cpu, double dio_combined,
                                const std::vector<double>& bw_samples) {
    validate_machine(machine);
    if (!(cc >= 1)) throw ValidationError("cc", "cc must be >= 1");
    if (!(dio_cpu > 0)) throw ValidationError("dio_cpu", "dio_cpu must be > 0");
    if (!(dio_combined > 0)) throw ValidationError("dio_combined", "dio_combined must be > 0");

    CrossoverCurve curve;
    curve.cc = cc;
    curve.dio_cpu = dio_cpu;
    curve.dio_combined = dio_combined;
    curve.cpu_pure_dominates = !(dio_cpu > dio_combined);

    for (double bw : bw_samples) {
        if (!(bw > 0) || !std::isfinite(bw)) throw ValidationError("bw", "bw samples must be > 0");
        CrossoverPoint pt;
        pt.bw = bw;
        // dio_cpu/bw = cc*ct/(xbs*R) + dio_combined/bw
        if (!curve.cpu_pure_dominates)
            pt.xbs_throughput = cc * machine.cycle_time * bw / (machine.rows * (dio_cpu - dio_combined));
        // ebit_cpu*bw = combined power  <=>  PIM power equals CPU power
        if (machine.ebit_pim > 0 && machine.ebit_cpu > 0)
            pt.xbs_power = machine.ebit_cpu * bw * machine.cycle_time / (machine.rows * machine.ebit_pim);
        curve.points.push_back(pt);
    }
    return curve;
}

Region classify_throughput(MachineConfig machine, double cc, double dio_cpu, double dio_combined, double xbs,
                           double bw) {
    machine.xbs = xbs;
    machine.bw = bw;
    machine.tdp_pim.reset();
    machine.tdp_cpu.reset();
    WorkloadProfile w;
    w.oc = cc;
    w.dio_cpu = dio_cpu;
    w.dio_combined = dio_combined;
    const auto r = engine::evaluate(machine, w);
    return r.tp_combined > r.tp_cpu ? Region::CombinedBetter : Region::CpuPureBetter;
}

}  // namespace bitlet::sweep
