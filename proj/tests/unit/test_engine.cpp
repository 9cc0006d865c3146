#include "bitlet/engine.hpp"

#include <cmath>

#include "doctest.h"
#include "oracle.hpp"

using namespace bitlet;
using namespace bitlet::engine;

namespace {

WorkloadProfile workload(double cc, double dio_cpu, double dio_combined) {
    WorkloadProfile w;
    w.oc = cc;
    w.dio_cpu = dio_cpu;
    w.dio_combined = dio_combined;
    return w;
}

MachineConfig random_machine(oracle::Gen& gen) {
    MachineConfig m;
    m.xbs = gen.pow2(0, 16);
    m.rows = gen.pow2(4, 10);
    m.cycle_time = gen.log_uniform(1e-9, 1e-7);
    m.ebit_pim = gen.log_uniform(1e-16, 1e-12);
    m.bw = gen.log_uniform(1e11, 1.6e13);
    m.ebit_cpu = gen.log_uniform(1e-12, 1e-10);
    return m;
}

double gops(double ops) { return ops / 1e9; }

}  // namespace

TEST_CASE("component throughputs") {
    const MachineConfig m;
    CHECK(gops(tp_pim(m, 656)) == doctest::Approx(159.84390).epsilon(1e-6));
    CHECK(oracle::round_to(gops(tp_pim(m, 656)), 0) == 160);

    MachineConfig unit;
    unit.xbs = 1;
    unit.rows = 1;
    unit.cycle_time = 1;
    CHECK(tp_pim(unit, 1) == 1);

    MachineConfig fp;
    fp.xbs = 65536;
    fp.cycle_time = 1.1e-9;
    CHECK(oracle::round_to(gops(tp_pim(fp, 336.5)), 0) == 181302);

    CHECK(oracle::round_to(gops(tp_cpu(m, 48)), 1) == 20.8);
    CHECK(oracle::round_to(gops(tp_cpu(m, 3)), 1) == 333.3);
    MachineConfig fast;
    fast.bw = 16000e9;
    CHECK(gops(tp_cpu(fast, 16)) == doctest::Approx(1000));

    CHECK_THROWS_AS(tp_pim(m, 0.5), ValidationError);
    CHECK_THROWS_AS(tp_cpu(m, 0), ValidationError);
}

TEST_CASE("harmonic combination") {
    CHECK(oracle::round_to(gops(tp_combined(160e9, 62.5e9)), 1) == 44.9);
    CHECK(oracle::round_to(gops(tp_combined(3277e9, 62.5e9)), 1) == 61.3);
    CHECK(tp_combined(5e9, INFINITY) == 5e9);
    CHECK(tp_combined(INFINITY, 7e9) == 7e9);
    CHECK_THROWS_AS(tp_combined(0, 1), ValidationError);
}

TEST_CASE("component powers") {
    const MachineConfig m;
    CHECK(oracle::round_to(p_pim(m), 1) == 10.5);
    MachineConfig fp;
    fp.xbs = 65536;
    fp.cycle_time = 1.1e-9;
    fp.ebit_pim = 2.9e-16;
    CHECK(p_pim(fp) == doctest::Approx(17.69).epsilon(1e-3));
    MachineConfig zero;
    zero.ebit_pim = 0;
    CHECK(p_pim(zero) == 0);

    CHECK(p_cpu(m) == doctest::Approx(15));
    CHECK(p_cpu(m, 0.5) == doctest::Approx(7.5));
    CHECK(p_cpu(m, 0) == 0);
    CHECK_THROWS_AS(p_cpu(m, 1.5), ValidationError);
}

TEST_CASE("energy per computation and combined power") {
    CHECK(oracle::round_to(to_j_per_gop(epc(15, 20.8e9)), 2) == 0.72);
    CHECK(oracle::round_to(to_j_per_gop(epc(13.7, 44.9e9)), 2) == 0.31);
    CHECK(epc(0, 5e9) == 0);
    CHECK(oracle::round_to(p_combined(10.5, 160e9, 15, 62.5e9, 44.9e9), 1) == 13.7);
    CHECK(oracle::round_to(p_combined(10.5, 4.1e9, 15, 15.625e9, 3.25e9), 1) == 11.4);
    CHECK(p_combined(7, 2e9, 7, 2e9, 1e9) == doctest::Approx(7));
}

TEST_CASE("worked example: shifted vector add") {
    const auto r = evaluate(MachineConfig{}, workload(656, 48, 16));
    CHECK(oracle::round_to(gops(r.tp_pim), 0) == 160);
    CHECK(oracle::round_to(gops(r.tp_cpu), 1) == 20.8);
    CHECK(oracle::round_to(gops(r.tp_cpu_side), 1) == 62.5);
    CHECK(oracle::round_to(gops(r.tp_combined), 1) == 44.9);
    CHECK(oracle::round_to(r.p_pim, 1) == 10.5);
    CHECK(oracle::round_to(r.p_cpu, 0) == 15);
    CHECK(oracle::round_to(r.p_combined, 1) == 13.7);
    CHECK(oracle::round_to(to_j_per_gop(r.epc_cpu), 2) == 0.72);
    CHECK(oracle::round_to(to_j_per_gop(r.epc_combined), 2) == 0.31);
    CHECK(r.duty_pim + r.duty_cpu == doctest::Approx(1));
}

TEST_CASE("binary operation columns") {
    struct Col {
        double cc, dio_cpu, dio_comb, tp_pim, tp_comb, p_comb;
        int tp_pim_dec, p_comb_dec;
    };
    const Col cols[] = {
        {32, 48, 16, 3277, 61.3, 14.9, 0, 1},      {144, 48, 16, 728, 57.6, 14.6, 0, 1},
        {1600, 48, 16, 65.5, 32.0, 12.8, 1, 1},    {6400, 96, 32, 16.4, 10.7, 12, 1, 0},
        {25600, 192, 64, 4.1, 3.2, 11.4, 1, 1},
    };
    for (const auto& c : cols) {
        const auto r = evaluate(MachineConfig{}, workload(c.cc, c.dio_cpu, c.dio_comb));
        CHECK(oracle::round_to(gops(r.tp_pim), c.tp_pim_dec) == c.tp_pim);
        CHECK(oracle::round_to(gops(r.tp_combined), 1) == c.tp_comb);
        CHECK(oracle::round_to(r.p_combined, c.p_comb_dec) == c.p_comb);
    }
}

TEST_CASE("PIM-pure and CPU-pure limits") {
    MachineConfig unit;
    unit.xbs = 1;
    unit.rows = 1;
    unit.cycle_time = 1;
    auto r = evaluate(unit, workload(1, 8, 0));
    CHECK(r.tp_combined == 1);
    CHECK(r.tp_pim == 1);
    CHECK(std::isinf(r.tp_cpu_side));
    CHECK(r.p_combined == doctest::Approx(r.p_pim));

    r = evaluate(MachineConfig{}, workload(0, 48, 16));
    CHECK(std::isinf(r.tp_pim));
    CHECK(r.tp_combined == doctest::Approx(r.tp_cpu_side));
    CHECK(r.p_combined == doctest::Approx(r.p_cpu));

    CHECK_THROWS_AS(evaluate(MachineConfig{}, workload(0, 48, 0)), ValidationError);
    CHECK_THROWS_AS(evaluate(MachineConfig{}, workload(0.5, 48, 16)), ValidationError);
    CHECK_THROWS_AS(evaluate(MachineConfig{}, workload(100, 0, 16)), ValidationError);
}

TEST_CASE("combined throughput is below both components") {
    oracle::Gen gen(41);
    for (int i = 0; i < oracle::kCases; ++i) {
        const auto m = random_machine(gen);
        const auto r = evaluate(m, workload(gen.log_uniform(1, 1e5), 48, gen.log_uniform(0.01, 256)));
        CHECK(r.tp_combined < std::min(r.tp_pim, r.tp_cpu_side));
        CHECK(r.p_combined >= std::min(r.p_pim, r.p_cpu) * (1 - 1e-12));
        CHECK(r.p_combined <= std::max(r.p_pim, r.p_cpu) * (1 + 1e-12));
    }
    // Equal components halve.
    CHECK(tp_combined(8e9, 8e9) == doctest::Approx(4e9).epsilon(1e-15));
}

TEST_CASE("PIM power ignores CC and CPU power ignores DIO") {
    oracle::Gen gen(42);
    for (int i = 0; i < oracle::kCases; ++i) {
        const auto m = random_machine(gen);
        const auto a = evaluate(m, workload(gen.log_uniform(1, 1e5), gen.log_uniform(1, 256), gen.log_uniform(1, 256)));
        const auto b = evaluate(m, workload(gen.log_uniform(1, 1e5), gen.log_uniform(1, 256), gen.log_uniform(1, 256)));
        CHECK(a.p_pim == b.p_pim);
        CHECK(a.p_cpu == b.p_cpu);
    }
}

TEST_CASE("scaling CC and DIO together keeps power and divides throughput") {
    oracle::Gen gen(43);
    for (int i = 0; i < oracle::kCases; ++i) {
        const auto m = random_machine(gen);
        const double cc = gen.log_uniform(1, 1e4);
        const double dio = gen.log_uniform(0.1, 256);
        const double k = gen.log_uniform(1, 100);
        const auto a = evaluate(m, workload(cc, 48, dio));
        const auto b = evaluate(m, workload(k * cc, 48, k * dio));
        CHECK(oracle::rel_close(b.p_combined, a.p_combined, 1e-10));
        CHECK(oracle::rel_close(b.tp_combined, a.tp_combined / k, 1e-10));
    }
}

TEST_CASE("time-accounting oracle agrees with the closed form") {
    oracle::Gen gen(44);
    for (int i = 0; i < oracle::kCases; ++i) {
        const auto m = random_machine(gen);
        const double cc = gen.log_uniform(1, 1e5);
        const double dio = gen.log_uniform(0.01, 256);
        const auto r = evaluate(m, workload(cc, 48, dio));
        const auto run =
            oracle::time_accounting(m.xbs, m.rows, m.cycle_time, m.bw, m.ebit_pim, m.ebit_cpu, cc, dio, gen.integer(1, 50));
        CHECK(oracle::rel_close(r.tp_combined, run.throughput(), 1e-12));
        CHECK(oracle::rel_close(r.p_combined, run.power(), 1e-12));
        CHECK(oracle::rel_close(r.epc_combined, run.joules / run.count, 1e-12));
    }
}

TEST_CASE("combined energy is the sum of the side energies") {
    oracle::Gen gen(45);
    for (int i = 0; i < oracle::kCases; ++i) {
        const auto m = random_machine(gen);
        const auto r = evaluate(m, workload(gen.log_uniform(1, 1e5), 48, gen.log_uniform(0.01, 256)));
        CHECK(oracle::rel_close(r.epc_combined, r.epc_pim + r.epc_cpu_side, 1e-12));
        CHECK(oracle::rel_close(r.p_combined, r.duty_pim * r.p_pim + r.duty_cpu * r.p_cpu, 1e-12));
    }
}

TEST_CASE("combined throughput is monotone in each parameter") {
    oracle::Gen gen(46);
    for (int i = 0; i < oracle::kCases; ++i) {
        const auto m = random_machine(gen);
        const auto w = workload(gen.log_uniform(1, 1e5), 48, gen.log_uniform(0.01, 256));
        const double base = evaluate(m, w).tp_combined;
        auto w2 = w;
        w2.oc *= 1.5;
        CHECK(evaluate(m, w2).tp_combined < base);
        w2 = w;
        w2.dio_combined *= 1.5;
        CHECK(evaluate(m, w2).tp_combined < base);
        auto m2 = m;
        m2.xbs *= 2;
        CHECK(evaluate(m2, w).tp_combined > base);
        m2 = m;
        m2.rows *= 2;
        CHECK(evaluate(m2, w).tp_combined > base);
        m2 = m;
        m2.bw *= 2;
        CHECK(evaluate(m2, w).tp_combined > base);
    }
}

TEST_CASE("combined_at matches evaluate away from the limits") {
    oracle::Gen gen(47);
    for (int i = 0; i < 200; ++i) {
        const auto m = random_machine(gen);
        const double cc = gen.log_uniform(1, 1e5);
        const double dio = gen.log_uniform(0.01, 256);
        const auto r = evaluate(m, workload(cc, 48, dio));
        const auto p = combined_at(m, cc, dio);
        CHECK(oracle::rel_close(p.tp, r.tp_combined, 1e-12));
        CHECK(oracle::rel_close(p.p, r.p_combined, 1e-12));
    }
    CHECK_THROWS_AS(combined_at(MachineConfig{}, 0, 0), ValidationError);
}

TEST_CASE("TDP throttling") {
    MachineConfig m;
    m.tdp_pim = 40.0;
    auto r = evaluate(m, workload(656, 48, 16));
    CHECK(r.throttle_factor_pim == 1);
    CHECK_FALSE(r.pim_tdp_bound);

    MachineConfig big;
    big.xbs = 65536;
    const auto free = evaluate(big, workload(336.5, 48, 16));
    CHECK(oracle::round_to(free.p_pim, 0) == 671);
    big.tdp_pim = free.p_pim / 10;
    r = evaluate(big, workload(336.5, 48, 16));
    CHECK(r.throttle_factor_pim == doctest::Approx(0.1));
    CHECK(r.tp_pim == doctest::Approx(free.tp_pim * 0.1));
    CHECK(r.pim_tdp_bound);
    CHECK(r.epc_pim == free.epc_pim);

    MachineConfig cpu;
    cpu.tdp_cpu = 7.5;
    const auto c = evaluate(cpu, workload(656, 48, 16));
    CHECK(c.tp_cpu == doctest::Approx(tp_cpu(MachineConfig{}, 48) / 2));
    CHECK(c.p_cpu == 7.5);
}

TEST_CASE("throttled power never exceeds the TDP") {
    oracle::Gen gen(48);
    for (int i = 0; i < oracle::kCases; ++i) {
        auto m = random_machine(gen);
        const double pp = p_pim(m);
        const double pc = p_cpu(m);
        m.tdp_pim = pp * gen.uniform(0.01, 2);
        m.tdp_cpu = pc * gen.uniform(0.01, 2);
        const auto r = evaluate(m, workload(gen.log_uniform(1, 1e5), 48, gen.log_uniform(0.01, 256)));
        CHECK(r.p_pim <= *m.tdp_pim + 1e-9);
        CHECK(r.p_cpu <= *m.tdp_cpu + 1e-9);
        CHECK(r.p_pim == doctest::Approx(pp * r.throttle_factor_pim));
        CHECK(r.tp_combined < std::min(r.tp_pim, r.tp_cpu_side));
    }
}
