#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bitlet/cli.hpp"
#include "bitlet/complexity.hpp"
#include "bitlet/config.hpp"
#include "bitlet/engine.hpp"
#include "bitlet/scenarios.hpp"
#include "bitlet/sweep.hpp"
#include "bitlet/usecases.hpp"
#include "goldens.hpp"
#include "oracle.hpp"

using namespace bitlet;

namespace {

class Criterion {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok) failures_.push_back(what);
    }
    void expect_rounded(double computed, double expected, int decimals, const std::string& what) {
        if (oracle::round_to(computed, decimals) != expected) {
            std::ostringstream os;
            os << what << ": computed " << computed << ", expected " << expected;
            failures_.push_back(os.str());
        }
    }
    [[nodiscard]] const std::vector<std::string>& failures() const { return failures_; }

private:
    std::vector<std::string> failures_;
};

double gops(double ops) { return ops / 1e9; }

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

void worked_example(Criterion& c) {
    const auto r = engine::evaluate(MachineConfig{}, workload(656, 48, 16));
    c.expect_rounded(gops(r.tp_pim), 160, 0, "tp_pim");
    c.expect_rounded(gops(r.tp_combined), 44.9, 1, "tp_combined");
    c.expect_rounded(r.p_pim, 10.5, 1, "p_pim");
    c.expect_rounded(r.p_cpu, 15, 0, "p_cpu");
    c.expect_rounded(r.p_combined, 13.7, 1, "p_combined");
    c.expect_rounded(to_j_per_gop(r.epc_cpu), 0.72, 2, "epc_cpu");
    c.expect_rounded(to_j_per_gop(r.epc_combined), 0.31, 2, "epc_combined");
}

void cpu_throughput_by_dio(Criterion& c) {
    const double dio[] = {48, 32, 16, 3};
    const double tp[] = {20.8, 31.3, 62.5, 333.3};
    for (int i = 0; i < 4; ++i)
        c.expect_rounded(gops(engine::tp_cpu(MachineConfig{}, dio[i])), tp[i], 1, "DIO " + std::to_string(dio[i]));
}

void binary_operation_columns(Criterion& c) {
    struct Col {
        double cc, dio_cpu, dio_comb, tp_pim, tp_comb, p_comb;
        int tp_pim_dec, p_comb_dec;
    };
    const Col cols[] = {
        {32, 48, 16, 3277, 61.3, 14.9, 0, 1},   {144, 48, 16, 728, 57.6, 14.6, 0, 1},
        {1600, 48, 16, 65.5, 32.0, 12.8, 1, 1}, {6400, 96, 32, 16.4, 10.7, 12, 1, 0},
        {25600, 192, 64, 4.1, 3.2, 11.4, 1, 1},
    };
    for (const auto& col : cols) {
        const auto r = engine::evaluate(MachineConfig{}, workload(col.cc, col.dio_cpu, col.dio_comb));
        const std::string tag = "CC " + std::to_string(static_cast<int>(col.cc));
        c.expect_rounded(gops(r.tp_pim), col.tp_pim, col.tp_pim_dec, tag + " tp_pim");
        c.expect_rounded(gops(r.tp_combined), col.tp_comb, 1, tag + " tp_combined");
        c.expect_rounded(r.p_combined, col.p_comb, col.p_comb_dec, tag + " p_combined");
    }
    c.expect(complexity::oc_cycles({complexity::OpKind::Or}, 16) == 32, "OR16 cycles");
    c.expect(complexity::oc_cycles({complexity::OpKind::Add}, 16) == 144, "ADD16 cycles");
    c.expect(complexity::oc_cycles({complexity::OpKind::MultLowApprox}, 16) == 1600, "MULT16 cycles");
    c.expect(complexity::oc_cycles({complexity::OpKind::MultLowApprox}, 32) == 6400, "MULT32 cycles");
    c.expect(complexity::oc_cycles({complexity::OpKind::MultLowApprox}, 64) == 25600, "MULT64 cycles");
}

void hadamard_rows(Criterion& c) {
    const double xbs[] = {256, 512, 4096, 16384};
    const double tp_pim[] = {37, 74, 591, 2363};
    const double tp_comb[] = {23, 34, 57, 61};
    for (int i = 0; i < 4; ++i) {
        MachineConfig m;
        m.xbs = xbs[i];
        const auto r = engine::evaluate(m, workload(710, 32, 16));
        const std::string tag = "XBs " + std::to_string(static_cast<int>(xbs[i]));
        c.expect_rounded(gops(r.tp_pim), tp_pim[i], 0, tag + " tp_pim");
        c.expect_rounded(gops(r.tp_combined), tp_comb[i], 0, tag + " tp_combined");
    }
}

void convolution(Criterion& c) {
    c.expect(complexity::convolution_cc(3, 8, 512).cycles == 69296, "p=3 R=512");
    c.expect(complexity::convolution_cc(3, 8, 1024).cycles == 77488, "p=3 R=1024");
    c.expect(complexity::convolution_cc(5, 8, 512).cycles == 188592, "p=5 R=512");
    c.expect(complexity::convolution_cc(5, 8, 1024).cycles == 204976, "p=5 R=1024");
    const double xbs[] = {1024, 8192, 65536};
    const double tp_pim[2][3] = {{1.4, 10.8, 86.6}, {0.5, 4.1, 32.7}};
    const double tp_comb[2][3] = {{1.3, 9.2, 36.3}, {0.5, 3.8, 21.5}};
    const int ps[] = {3, 5};
    for (int k = 0; k < 2; ++k) {
        const double cc = complexity::convolution_cc(ps[k], 8, 1024).cycles;
        for (int i = 0; i < 3; ++i) {
            MachineConfig m;
            m.xbs = xbs[i];
            const auto r = engine::evaluate(m, workload(cc, 16, 16));
            const std::string tag = "p=" + std::to_string(ps[k]) + " XBs " + std::to_string(static_cast<int>(xbs[i]));
            c.expect_rounded(gops(r.tp_pim), tp_pim[k][i], 1, tag + " tp_pim");
            c.expect_rounded(gops(r.tp_combined), tp_comb[k][i], 1, tag + " tp_combined");
        }
    }
}

void floating_point(Criterion& c) {
    MachineConfig fp;
    fp.xbs = 65536;
    fp.cycle_time = 1.1e-9;
    fp.ebit_pim = 0.29e-15;
    const double cc = complexity::kFloatPimTableCC;
    c.expect(cc == 336.5, "table CC");
    auto r = engine::evaluate(fp, workload(cc, 16, 16));
    c.expect_rounded(gops(r.tp_pim), 181302, 0, "FloatPIM tp_pim");
    c.expect_rounded(r.p_pim, 18, 0, "FloatPIM p_pim");
    c.expect(oracle::rel_close(gops(r.tp_pim) / r.p_pim, 10247, 0.005), "FloatPIM GOPS/W within 0.5%");

    MachineConfig def;
    def.xbs = 65536;
    r = engine::evaluate(def, workload(cc, 16, 16));
    c.expect_rounded(gops(r.tp_pim), 19943, 0, "default tp_pim");
    c.expect_rounded(r.p_pim, 671, 0, "default p_pim");
    c.expect_rounded(gops(r.tp_pim) / r.p_pim, 30, 0, "default GOPS/W");
}

void dot_product(Criterion& c) {
    c.expect(complexity::fipdp_cc(8, 32, 512) == 4191, "fipdp_cc(8, 32, 512)");
    c.expect_rounded(complexity::fipdp_cc(8, 32, 512), 4200, -2, "fipdp_cc displayed");
    MachineConfig m;
    m.xbs = 512;
    m.rows = 512;
    c.expect_rounded(gops(engine::tp_pim(m, complexity::fipdp_cc(8, 32, 512))), 6, 0, "XBs 512 R 512");
    m.xbs = 4096;
    m.rows = 1024;
    c.expect_rounded(gops(engine::tp_pim(m, complexity::fipdp_cc(8, 32, 1024))), 100, -2, "XBs 4096 R 1024");
}

void properties(Criterion& c) {
    oracle::Gen gen(2024);
    int bad_harmonic = 0, bad_ppim = 0, bad_pcpu = 0, bad_scale = 0, bad_time = 0, bad_gap = 0, bad_iso = 0,
        bad_partition = 0;
    for (int i = 0; i < oracle::kCases; ++i) {
        const auto m = random_machine(gen);
        const double cc = gen.log_uniform(1, 1e5);
        const double dio = gen.log_uniform(0.01, 256);
        const auto r = engine::evaluate(m, workload(cc, 48, dio));

        if (!(r.tp_combined < std::min(r.tp_pim, r.tp_cpu_side))) ++bad_harmonic;

        const auto other = engine::evaluate(m, workload(gen.log_uniform(1, 1e5), 48, gen.log_uniform(0.01, 256)));
        if (other.p_pim != r.p_pim) ++bad_ppim;
        if (other.p_cpu != r.p_cpu) ++bad_pcpu;

        const double k = gen.log_uniform(1, 100);
        const auto scaled = engine::evaluate(m, workload(k * cc, 48, k * dio));
        if (!oracle::rel_close(scaled.p_combined, r.p_combined, 1e-10) ||
            !oracle::rel_close(scaled.tp_combined, r.tp_combined / k, 1e-10))
            ++bad_scale;

        const auto run = oracle::time_accounting(m.xbs, m.rows, m.cycle_time, m.bw, m.ebit_pim, m.ebit_cpu, cc, dio,
                                                 gen.integer(1, 50));
        if (!oracle::rel_close(r.tp_combined, run.throughput(), 1e-12) ||
            !oracle::rel_close(r.p_combined, run.power(), 1e-12))
            ++bad_time;

        const double rows = gen.integer(2, 4096);
        const double w = gen.integer(1, 128);
        for (auto l : {complexity::LayoutClass::GatheredPlacementAlignment, complexity::LayoutClass::GatheredUnaligned,
                       complexity::LayoutClass::ScatteredPlacementAlignment, complexity::LayoutClass::ScatteredUnaligned,
                       complexity::LayoutClass::ReductionPerXB}) {
            const double gap = std::abs(complexity::pac_cycles(l, w, rows, true) - complexity::pac_cycles(l, w, rows, false));
            const double bound = l == complexity::LayoutClass::ScatteredPlacementAlignment ||
                                         l == complexity::LayoutClass::ScatteredUnaligned
                                     ? rows
                                 : l == complexity::LayoutClass::ReductionPerXB
                                     ? std::max(complexity::reduction_phases(rows) * w, 1.0)
                                     : w;
            if (gap > bound) ++bad_gap;
        }

        const double level = gops(r.tp_combined);
        const auto line = sweep::iso_line_cc_dio(m, Metric::TpCombinedGops, level, {10, 1e5, 1, 256, 16});
        const auto& s = line.samples;
        for (std::size_t j = 2; j < s.size(); ++j) {
            const double cross = (s[1].cc - s[0].cc) * (s[j].dio - s[0].dio) - (s[1].dio - s[0].dio) * (s[j].cc - s[0].cc);
            const double scale = std::abs(s[1].cc - s[0].cc) * std::abs(s[j].dio - s[0].dio) +
                                 std::abs(s[1].dio - s[0].dio) * std::abs(s[j].cc - s[0].cc);
            if (std::abs(cross) > 1e-9 * scale) ++bad_iso;
        }

        const double dio_cpu = gen.log_uniform(2, 256);
        const double dio_comb = dio_cpu * gen.uniform(0.01, 0.99);
        const double bw = gen.log_uniform(2.5e11, 1.6e13);
        const double star = *sweep::crossover_xbs_bw(m, cc, dio_cpu, dio_comb, {bw}).points[0].xbs_throughput;
        const double xbs = star * gen.log_uniform(0.1, 10);
        if (xbs >= 1 && !oracle::rel_close(xbs, star, 1e-6)) {
            const bool better = sweep::classify_throughput(m, cc, dio_cpu, dio_comb, xbs, bw) ==
                                sweep::Region::CombinedBetter;
            if (better != (xbs > star)) ++bad_partition;
        }
    }
    c.expect(bad_harmonic == 0, "harmonic bound: " + std::to_string(bad_harmonic));
    c.expect(bad_ppim == 0, "P_PIM independent of CC: " + std::to_string(bad_ppim));
    c.expect(bad_pcpu == 0, "P_CPU independent of DIO: " + std::to_string(bad_pcpu));
    c.expect(bad_scale == 0, "k-scaling: " + std::to_string(bad_scale));
    c.expect(bad_time == 0, "time accounting: " + std::to_string(bad_time));
    c.expect(bad_gap == 0, "exact/approximate gap: " + std::to_string(bad_gap));
    c.expect(bad_iso == 0, "iso-line collinearity: " + std::to_string(bad_iso));
    c.expect(bad_partition == 0, "crossover partition: " + std::to_string(bad_partition));
}

void conservation(Criterion& c) {
    oracle::Gen gen(7);
    int bad = 0;
    for (int i = 0; i < oracle::kCases; ++i) {
        const double s = gen.integer(1, 512);
        const double s1 = gen.integer(0, static_cast<int>(s));
        const double p = gen.uniform(0, 1);
        const double r = gen.pow2(1, 12);
        double n = gen.integer(1, 1 << 20);
        usecases::UseCase uc;
        switch (gen.integer(0, 8)) {
            case 0: uc = usecases::CpuPure{s}; break;
            case 1: uc = usecases::CpuPureTwoPass{s, s1, p}; break;
            case 2: uc = usecases::PimPure{s}; break;
            case 3: uc = usecases::Compact{s, s1}; break;
            case 4: uc = usecases::Filter1{s, p}; break;
            case 5: uc = usecases::Filter2{s, p, false}; break;
            case 6: uc = usecases::Hybrid{s, s1, p}; break;
            case 7: uc = usecases::Reduction0{s, s1}; break;
            default:
                n = r * gen.integer(1, 256);
                uc = usecases::Reduction1{s, s1, r};
                break;
        }
        const double total = usecases::total_transfer_bits(uc, n);
        const double saved = usecases::transfer_reduction_bits(uc, n);
        const double expected = oracle::transfer_bits(std::string(usecases::name_of(uc)), n, s, s1, p, r);
        if (!oracle::rel_close(total + saved, n * s, 1e-12) || !oracle::rel_close(total, expected, 1e-12) &&
                                                                    !(total == 0 && expected == 0))
            ++bad;
    }
    c.expect(bad == 0, "conservation failures: " + std::to_string(bad));
    c.expect(oracle::rel_close(usecases::dio_per_computation(usecases::Filter1{200, 0.01}, 1e6), 3, 1e-12),
             "filter DIO at (200, 0.01)");
    for (int i = 0; i < oracle::kCases; ++i) {
        const double s = gen.integer(1, 4096);
        const double p = gen.uniform(0, 1);
        if (!oracle::rel_close(usecases::dio_per_computation(usecases::Filter1{s, p}, gen.integer(1, 1 << 20)),
                               s * p + 1, 1e-12))
            ++bad;
    }
    c.expect(bad == 0, "filter DIO closed form");
}

config::ConfigDocument random_document(oracle::Gen& gen) {
    config::ConfigDocument d;
    d.machine = random_machine(gen);
    if (gen.coin()) d.machine.tdp_pim = gen.log_uniform(1, 1000);
    WorkloadProfile w;
    w.oc = gen.log_uniform(1, 1e5);
    w.pac = gen.log_uniform(1, 1e4);
    w.dio_cpu = gen.log_uniform(1, 256);
    w.dio_combined = gen.log_uniform(0.01, 256);
    d.workload = w;
    if (gen.coin()) {
        config::SweepSection s;
        s.axes.push_back({sweep::AxisParam::Cc, gen.log_uniform(1, 10), gen.log_uniform(100, 1e5), gen.integer(2, 64),
                          sweep::Scale::Log, {}});
        d.sweep = s;
    }
    if (gen.coin()) {
        config::ContourSection c;
        c.levels = {gen.log_uniform(1, 100), gen.log_uniform(100, 1000)};
        d.contour = c;
    }
    return d;
}

void interface(Criterion& c) {
    oracle::Gen gen(99);
    int bad = 0;
    for (int i = 0; i < oracle::kCases; ++i) {
        const auto d = random_document(gen);
        const auto text = config::render_config(d);
        if (!(config::parse_config(text) == d) || config::render_config(config::parse_config(text)) != text) ++bad;
    }
    c.expect(bad == 0, "config round trip: " + std::to_string(bad));

    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run({"scenario", "table6/add16", "--expect", "tp_combined_gops=99.9"}, out, err);
    c.expect(code == cli::kExitExpectationFailed, "corrupted expectation exit code " + std::to_string(code));
    out.str("");
    c.expect(cli::run({"scenario", "table6/add16"}, out, err) == cli::kExitOk, "intact expectation exit code");

    for (const auto& [name, text] : goldens::outputs()) {
        std::string golden;
        if (!goldens::read(std::string(BITLET_GOLDEN_DIR) + "/" + name, golden))
            c.expect(false, "missing golden " + name);
        else
            c.expect(golden == text, "golden " + name + " changed");
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
        {"worked example: shifted vector-add", worked_example},
        {"CPU throughput by DIO", cpu_throughput_by_dio},
        {"binary operation columns", binary_operation_columns},
        {"Hadamard product rows", hadamard_rows},
        {"convolution constants and throughputs", convolution},
        {"floating-point multiply", floating_point},
        {"fixed-point dot product", dot_product},
        {"property suite", properties},
        {"use case conservation and filter DIO", conservation},
        {"interface round trip, exit code and golden files", interface},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Criterion c;
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        const bool ok = c.failures().empty();
        failed += ok ? 0 : 1;
        std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": " << criteria[i].first << '\n';
        for (const auto& f : c.failures()) std::cout << "        " << f << '\n';
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
