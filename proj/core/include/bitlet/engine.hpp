#pragma once

#include "bitlet/quantities.hpp"

namespace bitlet::engine {

// Throughputs are in OPS, powers in watts, energies in J/OP. A side that does
// no work (cc = 0 or dio = 0) has +infinity throughput inside the combined
// math; the single-side functions below reject those inputs.

/// (xbs * rows) / (cc * cycle_time). Requires cc >= 1.
[[nodiscard]] double tp_pim(const MachineConfig& m, double cc);
/// bw / dio. Requires dio > 0.
[[nodiscard]] double tp_cpu(const MachineConfig& m, double dio);
/// Harmonic combination of two serial (non-overlapping) stages.
[[nodiscard]] double tp_combined(double tp_p, double tp_c);
/// ebit_pim * rows * xbs / cycle_time. Independent of the workload.
[[nodiscard]] double p_pim(const MachineConfig& m);
/// ebit_cpu * bw * duty, duty in [0, 1].
[[nodiscard]] double p_cpu(const MachineConfig& m, double duty = 1.0);
[[nodiscard]] double epc(double p, double tp);
/// (p_p/tp_p + p_c/tp_c) * tp_comb
[[nodiscard]] double p_combined(double p_p, double tp_p, double p_c, double tp_c, double tp_comb);

struct CombinedPoint {
    double tp = 0;   // OPS
    double p = 0;    // W
    double epc = 0;  // J/OP
};

/// Combined throughput/power at real-valued (cc, dio) with cc, dio >= 0 and
/// not both zero. Used for level sets and limits where cc < 1 is meaningful.
[[nodiscard]] CombinedPoint combined_at(const MachineConfig& m, double cc, double dio);

struct EvalResult {
    double tp_pim = 0;        // PIM pure
    double tp_cpu = 0;        // CPU pure, at dio_cpu
    double tp_cpu_side = 0;   // transfer stage of the combined system, at dio_combined
    double tp_combined = 0;
    double p_pim = 0;
    double p_cpu = 0;
    double p_combined = 0;
    double epc_pim = 0;
    double epc_cpu = 0;       // CPU pure
    double epc_cpu_side = 0;  // transfer share of a combined computation
    double epc_combined = 0;
    double duty_pim = 0;      // fraction of combined time spent in PIM
    double duty_cpu = 0;      // fraction of combined time the bus is busy
    double throttle_factor_pim = 1;
    double throttle_factor_cpu = 1;
    bool pim_tdp_bound = false;
    bool cpu_tdp_bound = false;

    bool operator==(const EvalResult&) const = default;
};

/// All nine outputs for one (machine, workload) pair. cc = 0 means the
/// CPU-pure limit and dio_combined = 0 the PIM-pure limit; both zero, or
/// 0 < cc < 1, is rejected. dio_cpu must be > 0. When the machine carries a
/// TDP the result is throttled.
[[nodiscard]] EvalResult evaluate(const MachineConfig& m, const WorkloadProfile& w);

/// Scales each side by min(1, tdp / power) and recombines. EPC values do not
/// change. Sides without a TDP are left alone.
[[nodiscard]] EvalResult throttle(EvalResult r, const MachineConfig& m);

}  // namespace bitlet::engine
