#include "bitlet/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bitlet::engine {

namespace {

constexpr double kUnbounded = std::numeric_limits<double>::infinity();

// Both sides of the combined system: duty-weighted mix of the component powers.
void recombine(EvalResult& r) {
    r.tp_combined = tp_combined(r.tp_pim, r.tp_cpu_side);
    r.epc_combined = r.epc_pim + r.epc_cpu_side;
    r.p_combined = p_combined(r.p_pim, r.tp_pim, r.p_cpu, r.tp_cpu_side, r.tp_combined);
    r.duty_pim = r.tp_combined / r.tp_pim;
    r.duty_cpu = r.tp_combined / r.tp_cpu_side;
}

}  // namespace

double tp_pim(const MachineConfig& m, double cc) {
    if (!(cc >= 1)) throw ValidationError("cc", "cc must be >= 1");
    return (m.xbs * m.rows) / (cc * m.cycle_time);
}

double tp_cpu(const MachineConfig& m, double dio) {
    if (!(dio > 0)) throw ValidationError("dio", "dio must be > 0");
    return m.bw / dio;
}

double tp_combined(double tp_p, double tp_c) {
    if (!(tp_p > 0) || !(tp_c > 0)) throw ValidationError("throughput", "component throughputs must be > 0");
    if (std::isinf(tp_p) && std::isinf(tp_c))
        throw ValidationError("throughput", "at least one side must do work");
    return 1.0 / (1.0 / tp_p + 1.0 / tp_c);
}

double p_pim(const MachineConfig& m) { return m.ebit_pim * m.rows * m.xbs / m.cycle_time; }

double p_cpu(const MachineConfig& m, double duty) {
    if (!(duty >= 0 && duty <= 1)) throw ValidationError("duty", "duty must be in [0, 1]");
    return m.ebit_cpu * m.bw * duty;
}

double epc(double p, double tp) {
    if (!(tp > 0)) throw ValidationError("throughput", "throughput must be > 0");
    return p / tp;
}

double p_combined(double p_p, double tp_p, double p_c, double tp_c, double tp_comb) {
    if (!(tp_p > 0) || !(tp_c > 0) || !(tp_comb > 0))
        throw ValidationError("throughput", "throughputs must be > 0");
    return (p_p / tp_p + p_c / tp_c) * tp_comb;
}

CombinedPoint combined_at(const MachineConfig& m, double cc, double dio) {
    if (!(cc >= 0)) throw ValidationError("cc", "cc must be >= 0");
    if (!(dio >= 0)) throw ValidationError("dio", "dio must be >= 0");
    if (cc == 0 && dio == 0) throw ValidationError("cc", "cc and dio_combined cannot both be 0");
    // Seconds per computation on each side.
    const double t_pim = cc * m.cycle_time / (m.xbs * m.rows);
    const double t_bus = dio / m.bw;
    CombinedPoint out;
    out.tp = 1.0 / (t_pim + t_bus);
    out.epc = m.ebit_pim * cc + m.ebit_cpu * dio;
    out.p = out.epc * out.tp;
    return out;
}

EvalResult evaluate(const MachineConfig& m, const WorkloadProfile& w) {
    validate_machine(m);
    validate_workload(w);
    const double cc = w.cc();
    if (cc > 0 && cc < 1) throw ValidationError("cc", "cc must be 0 or >= 1");
    if (cc == 0 && w.dio_combined == 0) throw ValidationError("cc", "cc and dio_combined cannot both be 0");
    if (!(w.dio_cpu > 0)) throw ValidationError("dio_cpu", "dio_cpu must be > 0");

    EvalResult r;
    r.tp_pim = cc == 0 ? kUnbounded : tp_pim(m, cc);
    r.tp_cpu = tp_cpu(m, w.dio_cpu);
    r.tp_cpu_side = w.dio_combined == 0 ? kUnbounded : tp_cpu(m, w.dio_combined);
    r.p_pim = p_pim(m);
    r.p_cpu = p_cpu(m);
    r.epc_pim = m.ebit_pim * cc;
    r.epc_cpu = epc(r.p_cpu, r.tp_cpu);
    r.epc_cpu_side = m.ebit_cpu * w.dio_combined;
    recombine(r);
    if (m.tdp_pim || m.tdp_cpu) r = throttle(r, m);
    return r;
}

EvalResult throttle(EvalResult r, const MachineConfig& m) {
    if (m.tdp_pim) {
        if (!(*m.tdp_pim > 0)) throw ValidationError("tdp_pim", "tdp_pim must be > 0");
        if (r.p_pim > *m.tdp_pim) {
            const double f = *m.tdp_pim / r.p_pim;
            r.tp_pim *= f;
            r.p_pim = *m.tdp_pim;
            r.throttle_factor_pim *= f;
            r.pim_tdp_bound = true;
        }
    }
    if (m.tdp_cpu) {
        if (!(*m.tdp_cpu > 0)) throw ValidationError("tdp_cpu", "tdp_cpu must be > 0");
        if (r.p_cpu > *m.tdp_cpu) {
            const double f = *m.tdp_cpu / r.p_cpu;
            r.tp_cpu *= f;
            r.tp_cpu_side *= f;
            r.p_cpu = *m.tdp_cpu;
            r.throttle_factor_cpu *= f;
            r.cpu_tdp_bound = true;
        }
    }
    recombine(r);
    return r;
}

}  // namespace bitlet::engine
