#include "bitlet/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <utility>

#include "bitlet/complexity.hpp"
#include "bitlet/usecases.hpp"

namespace bitlet::scenarios {

namespace {

using complexity::LayoutClass;
using complexity::OpKind;

Expectation ex(Metric m, double v, int decimals, std::string cite) {
    return {m, v, decimals, std::nullopt, std::move(cite)};
}

MachineConfig machine(double xbs, double rows, double bw_gbps = 1000) {
    MachineConfig m;
    m.xbs = xbs;
    m.rows = rows;
    m.bw = from_gbps(bw_gbps);
    return m;
}

// Binary W-bit operation whose PIM result replaces two inputs and an output
// on the bus: CPU pure moves 3W bits, combined moves W.
WorkloadProfile compaction(OpKind op, double width, std::string label) {
    const auto cycles = complexity::compile({{op}, width, LayoutClass::ParallelAligned, std::nullopt, true});
    const usecases::UseCase uc = usecases::Compact{3 * width, width};
    WorkloadProfile w;
    w.oc = cycles.oc;
    w.pac = cycles.pac;
    w.dio_cpu = usecases::cpu_pure_dio(uc);
    w.dio_combined = usecases::dio_per_computation(uc, 1);
    w.label = std::move(label);
    return w;
}

WorkloadProfile fixed(double cc, double dio_cpu, double dio_combined, std::string label) {
    WorkloadProfile w;
    w.oc = cc;
    w.dio_cpu = dio_cpu;
    w.dio_combined = dio_combined;
    w.label = std::move(label);
    return w;
}

WorkloadProfile shifted_vector_add() {
    // The worked example prints CC = OC + R = 144 + 512.
    const auto cycles =
        complexity::compile({{OpKind::Add}, 16, LayoutClass::GatheredUnaligned, 512.0, /*exact=*/false});
    WorkloadProfile w;
    w.oc = cycles.oc;
    w.pac = cycles.pac;
    w.dio_cpu = 48;
    w.dio_combined = 16;
    w.label = "shifted 16-bit vector add";
    return w;
}

std::vector<Expectation> shifted_vector_add_expectations(const std::string& src) {
    return {
        ex(Metric::CcCycles, 656, 0, src + ": CC = 144+512 = 656"),
        ex(Metric::OpsPerCycle, 1598, 0, src + ": 1598 computations per cycle"),
        ex(Metric::TpPimGops, 160, 0, src + ": TP_PIM ~ 160 GOPS"),
        ex(Metric::TpCpuGops, 20.8, 1, src + ": CPU pure 20.8 GOPS at DIO 48"),
        ex(Metric::TpCpuSideGops, 62.5, 1, src + ": data transfer 62.5 GOPS at DIO 16"),
        ex(Metric::TpCombinedGops, 44.9, 1, src + ": TP_Combined = 44.9 GOPS"),
        ex(Metric::PPimW, 10.5, 1, src + ": P_PIM = 10.5 W"),
        ex(Metric::PCpuW, 15, 0, src + ": P_CPU = 15 W"),
        ex(Metric::PCombinedW, 13.7, 1, src + ": P_Combined = 13.7 W"),
        ex(Metric::EpcCpuJgop, 0.72, 2, src + ": EPC_CPU = 0.72 J/GOP"),
        ex(Metric::EpcCombinedJgop, 0.31, 2, src + ": EPC_Combined = 0.31 J/GOP"),
    };
}

std::vector<Scenario> build_catalog() {
    std::vector<Scenario> out;
    const auto add = [&](std::string id, std::string desc, MachineConfig m, WorkloadProfile w,
                         std::vector<Expectation> e) {
        out.push_back({std::move(id), std::move(desc), m, std::move(w), std::move(e)});
    };

    add("walkthrough/shifted-vector-add",
        "Shifted 16-bit vector add C[i-1] = A[i] + B[i], gathered unaligned, default machine",
        MachineConfig{}, shifted_vector_add(), shifted_vector_add_expectations("shifted vector-add walkthrough"));

    // Data transfer throughput at 1000 Gbps for several DIO values.
    {
        const double filter_dio = usecases::dio_per_computation(usecases::Filter1{200, 0.01}, 1);
        const struct {
            const char* id;
            const char* desc;
            double dio;
            double dio_printed;
            double tp;
        } rows[] = {
            {"table3/cpu-pure", "CPU pure: two 16-bit inputs and the output cross the bus", 48, 48, 20.8},
            {"table3/inputs-only", "Inputs only: no write-back", 32, 32, 31.3},
            {"table3/compaction", "Compaction: only the 16-bit PIM result crosses the bus", 16, 16, 62.5},
            {"table3/filter", "Filter over 200-bit records at 1% selectivity with a bit vector", filter_dio, 3, 333.3},
        };
        for (const auto& r : rows) {
            add(r.id, r.desc, MachineConfig{}, fixed(656, r.dio, r.dio, r.desc),
                {ex(Metric::DioCpuBits, r.dio_printed, 0, "Table 3 DIO"),
                 ex(Metric::TpCpuGops, r.tp, 1, "Table 3 data transfer throughput")});
        }
    }

    // Binary-operation examples.
    {
        const struct {
            const char* id;
            OpKind op;
            double width;
            double cc, tp_pim, tp_cpu, tp_comb, p_comb;
            int tp_pim_dec, p_comb_dec;
        } cols[] = {
            {"table6/or16", OpKind::Or, 16, 32, 3277, 20.8, 61.3, 14.9, 0, 1},
            {"table6/add16", OpKind::Add, 16, 144, 728, 20.8, 57.6, 14.6, 0, 1},
            {"table6/mult16", OpKind::MultLowApprox, 16, 1600, 65.5, 20.8, 32.0, 12.8, 1, 1},
            {"table6/mult32", OpKind::MultLowApprox, 32, 6400, 16.4, 10.4, 10.7, 12, 1, 0},
            {"table6/mult64", OpKind::MultLowApprox, 64, 25600, 4.1, 5.2, 3.2, 11.4, 1, 1},
        };
        for (const auto& c : cols) {
            const std::string name = std::to_string(static_cast<int>(c.width)) + "-bit " +
                                     std::string(complexity::to_string(c.op));
            add(c.id, name + ", parallel aligned compaction (DIO 3W/W), default machine", MachineConfig{},
                compaction(c.op, c.width, name),
                {
                    ex(Metric::CcCycles, c.cc, 0, "Table 6 CC"),
                    ex(Metric::TpPimGops, c.tp_pim, c.tp_pim_dec, "Table 6 PIM throughput"),
                    ex(Metric::TpCpuGops, c.tp_cpu, 1, "Table 6 CPU throughput"),
                    ex(Metric::TpCombinedGops, c.tp_comb, 1, "Table 6 combined throughput"),
                    ex(Metric::PPimW, 10.5, 1, "Table 6 PIM power"),
                    ex(Metric::PCpuW, 15.0, 1, "Table 6 CPU power"),
                    ex(Metric::PCombinedW, c.p_comb, c.p_comb_dec, "Table 6 combined power"),
                });
        }
    }

    // Hadamard product, CC = 710, DIO 32 (CPU) / 16 (combined).
    {
        const struct {
            double xbs, rows, per_cycle, tp_pim, tp_comb;
        } rows[] = {
            {512, 512, 369, 37, 23},
            {1024, 512, 738, 74, 34},
            {4096, 1024, 5907, 591, 57},
            {16384, 1024, 23630, 2363, 61},
        };
        for (const auto& r : rows) {
            const auto xbs = std::to_string(static_cast<int>(r.xbs));
            add("table7/hadamard-" + xbs,
                "8-bit Hadamard product, " + xbs + " XBs x " + std::to_string(static_cast<int>(r.rows)) + " rows",
                machine(r.xbs, r.rows), fixed(complexity::kHadamardPublishedCC, 32, 16, "Hadamard product"),
                {
                    ex(Metric::CcCycles, 710, 0, "Table 7 CC"),
                    ex(Metric::OpsPerCycle, r.per_cycle, 0, "Table 7 TP per cycle"),
                    ex(Metric::TpPimGops, r.tp_pim, 0, "Table 7 TP_PIM"),
                    ex(Metric::TpCpuGops, 31, 0, "Table 7 TP_CPU"),
                    ex(Metric::TpCombinedGops, r.tp_comb, 0, "Table 7 TP_Combined"),
                });
        }
    }

    // Convolution cycle constants.
    for (int p : {3, 5}) {
        for (double rows : {512.0, 1024.0}) {
            const auto cc = complexity::convolution_cc(p, 8, rows);
            const auto ps = std::to_string(p);
            const auto rs = std::to_string(static_cast<int>(rows));
            add("table8/conv-p" + ps + "-r" + rs, ps + "x" + ps + " convolution of 8-bit pixels, R=" + rs,
                machine(1024, rows), fixed(cc.cycles, 16, 16, "convolution"),
                {ex(Metric::CcCycles, cc.cycles, 0, "Table 8 CC (P=" + ps + ", R=" + rs + ")")});
        }
    }

    // Convolution throughput, R = 1024, DIO 16/16.
    {
        const struct {
            int p;
            double xbs, per_cycle, tp_pim, tp_comb;
        } rows[] = {
            {3, 1024, 14, 1.4, 1.3},  {3, 8192, 108, 10.8, 9.2}, {3, 65536, 866, 86.6, 36.3},
            {5, 1024, 5, 0.5, 0.5},   {5, 8192, 41, 4.1, 3.8},   {5, 65536, 327, 32.7, 21.5},
        };
        for (const auto& r : rows) {
            const auto cc = complexity::convolution_cc(r.p, 8, 1024);
            const auto ps = std::to_string(r.p);
            const auto xbs = std::to_string(static_cast<int>(r.xbs));
            add("table9/conv-p" + ps + "-" + xbs, ps + "x" + ps + " convolution, " + xbs + " XBs x 1024 rows",
                machine(r.xbs, 1024), fixed(cc.cycles, 16, 16, "convolution"),
                {
                    ex(Metric::CcCycles, cc.cycles, 0, "Table 9 CC"),
                    ex(Metric::OpsPerCycle, r.per_cycle, 0, "Table 9 TP per cycle"),
                    ex(Metric::TpPimGops, r.tp_pim, 1, "Table 9 TP_PIM"),
                    ex(Metric::TpCpuGops, 63, 0, "Table 9 TP_CPU"),
                    ex(Metric::TpCombinedGops, r.tp_comb, 1, "Table 9 TP_Combined"),
                });
        }
    }

    // bfloat16 add/multiply with FloatPIM technology parameters vs defaults.
    {
        MachineConfig fp = machine(65536, 1024);
        fp.cycle_time = 1.1e-9;
        fp.ebit_pim = 2.9e-16;
        const auto w = fixed(complexity::kFloatPimTableCC, 48, 0, "bfloat16 add/multiply average");
        Expectation ratio = ex(Metric::GopsPerWattPim, 10247, 0, "Table 10 TP_PIM/P_PIM (FloatPIM)");
        ratio.rel_tol = 0.005;
        add("table10/floatpim", "bfloat16 ops, 64K XBs, CT 1.1 ns, Ebit_PIM 0.29 fJ", fp, w,
            {
                ex(Metric::CcCycles, 336.5, 1, "Table 10 CC"),
                ex(Metric::OpsPerCycle, 199432, 0, "Table 10 TP per cycle"),
                ex(Metric::TpPimGops, 181302, 0, "Table 10 TP_PIM (FloatPIM)"),
                ex(Metric::PPimW, 18, 0, "Table 10 P_PIM (FloatPIM)"),
                ratio,
            });
        add("table10/floatpim-default", "bfloat16 ops, 64K XBs, default CT and Ebit_PIM", machine(65536, 1024), w,
            {
                ex(Metric::CcCycles, 336.5, 1, "Table 10 CC"),
                ex(Metric::OpsPerCycle, 199432, 0, "Table 10 TP per cycle"),
                ex(Metric::TpPimGops, 19943, 0, "Table 10 TP_PIM (default)"),
                ex(Metric::PPimW, 671, 0, "Table 10 P_PIM (default)"),
                ex(Metric::GopsPerWattPim, 30, 0, "Table 10 TP_PIM/P_PIM (default)"),
            });
    }

    // Fixed-point dot product: 8-bit multiply then per-XB reduction of 32-bit sums.
    {
        const double cc = complexity::fipdp_cc(8, 32, 512);
        const auto dio = [](double rows) {
            return usecases::dio_per_computation(usecases::Reduction1{32, 32, rows}, rows);
        };
        add("fipdp/xbs512-r512", "FiPDP 8-bit inputs, 32-bit accumulation, 512 XBs x 512 rows", machine(512, 512),
            fixed(cc, 32, dio(512), "FiPDP"),
            {
                ex(Metric::CcCycles, 4200, -2, "FiPDP case study: approximately 4200 cycles"),
                ex(Metric::TpPimGops, 6, 0, "FiPDP case study: about 6 GOPS"),
                ex(Metric::TpCombinedGops, 6, 0, "FiPDP case study: about 6 GOPS"),
                ex(Metric::TpCpuGops, 31, 0, "FiPDP case study: CPU pure 31 GOPS"),
            });
        add("fipdp/xbs4096-r1024", "FiPDP on 4096 XBs x 1024 rows (same CC)", machine(4096, 1024),
            fixed(cc, 32, dio(1024), "FiPDP"),
            {
                ex(Metric::TpPimGops, 100, 0, "FiPDP case study: about 100 GOPS"),
                ex(Metric::TpCombinedGops, 100, 0, "FiPDP case study: about 100 GOPS"),
                ex(Metric::TpCpuGops, 31, 0, "FiPDP case study: CPU pure 31 GOPS"),
            });
    }

    // Spreadsheet columns. Only prose-confirmed values are pinned.
    {
        const auto add16 = compaction(OpKind::Add, 16, "16-bit ADD");
        add("figure4/case1a", "Compaction, 16-bit OR, 1024 XBs, 1000 Gbps", machine(1024, 1024),
            compaction(OpKind::Or, 16, "16-bit OR"), {});
        add("figure4/case1b", "Compaction, 16-bit ADD, 1024 XBs, 1000 Gbps", machine(1024, 1024), add16,
            {
                ex(Metric::TpPimGops, 728, 0, "Figure 4 case 1b discussion: PIM throughput 728 GOPS"),
                ex(Metric::TpCpuSideGops, 63, 0, "Figure 4 case 1b discussion: CPU throughput 63 GOPS"),
            });
        add("figure4/case1c", "Compaction, 16-bit MULTIPLY, 1024 XBs, 1000 Gbps", machine(1024, 1024),
            compaction(OpKind::MultLowApprox, 16, "16-bit MULTIPLY"), {});
        add("figure4/case1d", "Compaction, 16-bit ADD, 16384 XBs, 1000 Gbps", machine(16384, 1024), add16, {});
        add("figure4/case1e", "Compaction, 16-bit ADD, 1024 XBs, 16000 Gbps", machine(1024, 1024, 16000), add16, {});
        add("figure4/case1f", "Compaction, 16-bit ADD, 16384 XBs, 16000 Gbps", machine(16384, 1024, 16000), add16,
            {});
        add("figure4/case2", "Shifted vector add (same as the walkthrough)", MachineConfig{}, shifted_vector_add(),
            shifted_vector_add_expectations("Figure 4 case 2"));

        // The predicate cost is not given; 1600 cycles is an assumption.
        const double filter_dio = usecases::dio_per_computation(usecases::Filter1{200, 0.01}, 1);
        const auto filter = fixed(1600, 200, filter_dio, "filter 200-bit records, 1%");
        const std::string note = " (predicate CC=1600 assumed)";
        add("figure4/case3a", "Filter, 1024 XBs, 1000 Gbps" + note, machine(1024, 1024), filter, {});
        add("figure4/case3b", "Filter, 16384 XBs, 1000 Gbps" + note, machine(16384, 1024), filter, {});
        add("figure4/case3c", "Filter, 1024 XBs, 16000 Gbps" + note, machine(1024, 1024, 16000), filter, {});
        add("figure4/case3d", "Filter, 16384 XBs, 16000 Gbps" + note, machine(16384, 1024, 16000), filter, {});

        const auto red = complexity::compile({{OpKind::Add}, 16, LayoutClass::ReductionPerXB, 1024.0, true});
        WorkloadProfile sum;
        sum.oc = red.oc;
        sum.pac = red.pac;
        sum.dio_cpu = 16;
        sum.dio_combined = usecases::dio_per_computation(usecases::Reduction1{16, 16, 1024}, 1024);
        sum.label = "16-bit vector sum, per-XB reduction";
        add("figure4/case4", "Reduction: sum of a 16-bit vector, per-XB tree then CPU", machine(1024, 1024), sum,
            {});
    }
    return out;
}

}  // namespace

bool ScenarioReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

const std::vector<Scenario>& list_scenarios() {
    static const std::vector<Scenario> catalog = build_catalog();
    return catalog;
}

const Scenario& find_scenario(const std::string& id) {
    for (const auto& s : list_scenarios())
        if (s.id == id) return s;
    throw UnknownScenario(id);
}

std::optional<CompareMode> parse_compare_mode(std::string_view text) {
    if (text == "displayed") return CompareMode{};
    if (text.substr(0, 4) != "rel:") return std::nullopt;
    const std::string tol(text.substr(4));
    char* end = nullptr;
    const double v = std::strtod(tol.c_str(), &end);
    if (tol.empty() || *end != '\0' || !(v >= 0) || !std::isfinite(v)) return std::nullopt;
    return CompareMode{false, v};
}

Expectation parse_expectation(std::string_view text) {
    const std::string s(text);
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ValidationError("expect", "expected metric=value[:decimals], got '" + s + "'");
    const auto metric = parse_metric(s.substr(0, eq));
    if (!metric) throw ValidationError("expect", "unknown metric '" + s.substr(0, eq) + "'");
    std::string value = s.substr(eq + 1);
    int decimals = 1;
    if (const auto colon = value.find(':'); colon != std::string::npos) {
        const std::string d = value.substr(colon + 1);
        char* end = nullptr;
        decimals = static_cast<int>(std::strtol(d.c_str(), &end, 10));
        if (d.empty() || *end != '\0') throw ValidationError("expect", "decimals must be an integer");
        value = value.substr(0, colon);
    }
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (value.empty() || *end != '\0' || !std::isfinite(v))
        throw ValidationError("expect", "malformed value '" + value + "'");
    return {*metric, v, decimals, std::nullopt, "command line"};
}

bool matches_at_precision(double computed, double expected, int decimals) {
    if (!std::isfinite(computed)) return false;
    const double scale = std::pow(10.0, decimals);
    return std::round(computed * scale) == std::round(expected * scale);
}

bool check(const Expectation& e, double computed, const CompareMode& mode) {
    if (e.rel_tol) return std::abs(computed - e.value) <= *e.rel_tol * std::abs(e.value);
    if (mode.displayed_rounding) return matches_at_precision(computed, e.value, e.decimals);
    return std::abs(computed - e.value) <= mode.rel_tol * std::abs(e.value);
}

ScenarioReport run_scenario(const Scenario& s, const CompareMode& mode, const std::vector<Expectation>& overrides) {
    ScenarioReport report;
    report.id = s.id;
    report.description = s.description;
    report.machine = s.machine;
    report.workload = s.workload;
    report.result = engine::evaluate(s.machine, s.workload);

    std::vector<Expectation> expected = s.expected;
    for (const auto& o : overrides) {
        auto it = std::find_if(expected.begin(), expected.end(), [&](const auto& e) { return e.metric == o.metric; });
        if (it != expected.end())
            *it = o;
        else
            expected.push_back(o);
    }
    for (auto& e : expected) {
        const double v = metric_value(e.metric, s.machine, s.workload, report.result);
        report.checks.push_back({e, v, check(e, v, mode)});
    }
    return report;
}

ScenarioReport run_scenario(const std::string& id, const CompareMode& mode, const std::vector<Expectation>& overrides) {
    return run_scenario(find_scenario(id), mode, overrides);
}

}  // namespace bitlet::scenarios
