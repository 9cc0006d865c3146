#include "bitlet/emit.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "json_codec.hpp"

namespace bitlet::emit {

namespace detail {

ojson number(double v) { return std::isfinite(v) ? ojson(v) : ojson(nullptr); }

ojson machine_to_json(const MachineConfig& m) {
    ojson j = ojson::object();
    j["xbs"] = m.xbs;
    j["rows"] = m.rows;
    j["cols"] = m.cols;
    j["cycle_time"] = m.cycle_time;
    j["ebit_pim"] = m.ebit_pim;
    j["bw"] = m.bw;
    j["ebit_cpu"] = m.ebit_cpu;
    j["tdp_pim"] = m.tdp_pim ? ojson(*m.tdp_pim) : ojson(nullptr);
    j["tdp_cpu"] = m.tdp_cpu ? ojson(*m.tdp_cpu) : ojson(nullptr);
    return j;
}

ojson workload_to_json(const WorkloadProfile& w) {
    ojson j = ojson::object();
    j["oc"] = w.oc;
    j["pac"] = w.pac;
    j["cc"] = w.cc();
    j["dio_cpu"] = w.dio_cpu;
    j["dio_combined"] = w.dio_combined;
    j["label"] = w.label;
    return j;
}

ojson result_to_json(const engine::EvalResult& r) {
    ojson j = ojson::object();
    j["tp_pim"] = number(r.tp_pim);
    j["tp_cpu"] = number(r.tp_cpu);
    j["tp_cpu_side"] = number(r.tp_cpu_side);
    j["tp_combined"] = number(r.tp_combined);
    j["p_pim"] = number(r.p_pim);
    j["p_cpu"] = number(r.p_cpu);
    j["p_combined"] = number(r.p_combined);
    j["epc_pim"] = number(r.epc_pim);
    j["epc_cpu"] = number(r.epc_cpu);
    j["epc_cpu_side"] = number(r.epc_cpu_side);
    j["epc_combined"] = number(r.epc_combined);
    j["duty_pim"] = number(r.duty_pim);
    j["duty_cpu"] = number(r.duty_cpu);
    j["throttle_factor_pim"] = number(r.throttle_factor_pim);
    j["throttle_factor_cpu"] = number(r.throttle_factor_cpu);
    j["pim_tdp_bound"] = r.pim_tdp_bound;
    j["cpu_tdp_bound"] = r.cpu_tdp_bound;
    return j;
}

ojson outputs_to_json(const NamedResult& r) {
    ojson j = ojson::object();
    for (Metric m : all_metrics()) j[std::string(metric_id(m))] = number(metric_value(m, r.machine, r.workload, r.result));
    return j;
}

ojson named_to_json(const NamedResult& r) {
    ojson j = ojson::object();
    j["name"] = r.name;
    j["machine"] = machine_to_json(r.machine);
    j["workload"] = workload_to_json(r.workload);
    j["outputs"] = outputs_to_json(r);
    j["result"] = result_to_json(r.result);
    return j;
}

ojson sweep_to_json(const sweep::SweepGrid& grid) {
    ojson j = ojson::object();
    j["axes"] = ojson::array();
    j["shape"] = ojson::array();
    for (std::size_t a = 0; a < grid.axes.size(); ++a) {
        ojson axis = ojson::object();
        axis["param"] = std::string(sweep::to_string(grid.axes[a].param));
        axis["values"] = grid.coords[a];
        j["axes"].push_back(axis);
        j["shape"].push_back(grid.coords[a].size());
    }
    j["metrics"] = ojson::array();
    ojson values = ojson::object();
    for (Metric m : grid.metrics) {
        const std::string id(metric_id(m));
        j["metrics"].push_back(id);
        ojson col = ojson::array();
        for (std::size_t c = 0; c < grid.size(); ++c) col.push_back(number(grid.value(c, m)));
        values[id] = col;
    }
    j["values"] = values;
    return j;
}

ojson iso_lines_to_json(const std::vector<sweep::IsoLine>& lines) {
    ojson arr = ojson::array();
    for (const auto& l : lines) {
        ojson j = ojson::object();
        j["metric"] = std::string(metric_id(l.metric));
        j["level"] = l.level;
        j["cc_coef"] = l.cc_coef;
        j["dio_coef"] = l.dio_coef;
        j["rhs"] = l.rhs;
        j["points"] = ojson::array();
        for (const auto& p : l.samples) j["points"].push_back(ojson::array({p.cc, p.dio}));
        arr.push_back(j);
    }
    ojson out = ojson::object();
    out["lines"] = arr;
    return out;
}

ojson crossover_to_json(const sweep::CrossoverCurve& curve) {
    ojson j = ojson::object();
    j["cc"] = curve.cc;
    j["dio_cpu"] = curve.dio_cpu;
    j["dio_combined"] = curve.dio_combined;
    j["cpu_pure_dominates"] = curve.cpu_pure_dominates;
    j["points"] = ojson::array();
    for (const auto& p : curve.points) {
        ojson pj = ojson::object();
        pj["bw_gbps"] = to_gbps(p.bw);
        pj["xbs_throughput"] = p.xbs_throughput ? number(*p.xbs_throughput) : ojson(nullptr);
        pj["xbs_power"] = p.xbs_power ? number(*p.xbs_power) : ojson(nullptr);
        j["points"].push_back(pj);
    }
    return j;
}

namespace {

ojson expectation_to_json(const scenarios::Expectation& e) {
    ojson j = ojson::object();
    j["metric"] = std::string(metric_id(e.metric));
    j["value"] = e.value;
    j["decimals"] = e.decimals;
    j["rel_tol"] = e.rel_tol ? ojson(*e.rel_tol) : ojson(nullptr);
    j["citation"] = e.citation;
    return j;
}

}  // namespace

ojson report_to_json(const scenarios::ScenarioReport& report) {
    ojson j = ojson::object();
    j["id"] = report.id;
    j["description"] = report.description;
    j["passed"] = report.passed();
    j["machine"] = machine_to_json(report.machine);
    j["workload"] = workload_to_json(report.workload);
    j["outputs"] = outputs_to_json({report.id, report.machine, report.workload, report.result});
    j["result"] = result_to_json(report.result);
    j["checks"] = ojson::array();
    for (const auto& c : report.checks) {
        ojson cj = expectation_to_json(c.expectation);
        cj["computed"] = number(c.computed);
        cj["pass"] = c.pass;
        j["checks"].push_back(cj);
    }
    return j;
}

ojson catalog_to_json(const std::vector<scenarios::Scenario>& catalog) {
    ojson arr = ojson::array();
    for (const auto& s : catalog) {
        ojson j = ojson::object();
        j["id"] = s.id;
        j["description"] = s.description;
        j["machine"] = machine_to_json(s.machine);
        j["workload"] = workload_to_json(s.workload);
        j["expectations"] = ojson::array();
        for (const auto& e : s.expected) j["expectations"].push_back(expectation_to_json(e));
        arr.push_back(j);
    }
    ojson out = ojson::object();
    out["scenarios"] = arr;
    return out;
}

ojson errors_to_json(const std::vector<FieldError>& errors) {
    ojson arr = ojson::array();
    for (const auto& e : errors) arr.push_back({{"field", e.field}, {"message", e.message}});
    ojson out = ojson::object();
    out["errors"] = arr;
    return out;
}

}  // namespace detail

namespace {

using detail::ojson;

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string display(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    std::ostringstream os;
    os << std::setprecision(6) << v;
    return os.str();
}

struct Row {
    std::string label;
    std::vector<std::string> cells;
};

std::string render_columns(const std::vector<std::string>& header, const std::vector<Row>& rows) {
    std::size_t label_w = 0;
    for (const auto& r : rows) label_w = std::max(label_w, r.label.size());
    std::vector<std::size_t> widths(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        widths[c] = header[c].size();
        for (const auto& r : rows) widths[c] = std::max(widths[c], r.cells[c].size());
    }
    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(label_w)) << "";
    for (std::size_t c = 0; c < header.size(); ++c)
        os << "  " << std::right << std::setw(static_cast<int>(widths[c])) << header[c];
    os << '\n';
    for (const auto& r : rows) {
        os << std::left << std::setw(static_cast<int>(label_w)) << r.label;
        for (std::size_t c = 0; c < r.cells.size(); ++c)
            os << "  " << std::right << std::setw(static_cast<int>(widths[c])) << r.cells[c];
        os << '\n';
    }
    return os.str();
}

std::string table_text(const std::vector<NamedResult>& results) {
    std::vector<std::string> header;
    for (const auto& r : results) header.push_back(r.name);
    const bool any_tdp = std::any_of(results.begin(), results.end(), [](const auto& r) {
        return r.machine.tdp_pim.has_value() || r.machine.tdp_cpu.has_value();
    });

    std::vector<Row> rows;
    const auto param = [&](std::string label, auto get) {
        Row row{std::move(label), {}};
        for (const auto& r : results) row.cells.push_back(display(get(r)));
        rows.push_back(std::move(row));
    };
    const auto output = [&](std::string label, Metric m) {
        param(std::move(label), [m](const NamedResult& r) { return metric_value(m, r.machine, r.workload, r.result); });
    };
    param("XBs", [](const NamedResult& r) { return r.machine.xbs; });
    param("R", [](const NamedResult& r) { return r.machine.rows; });
    param("CT [ns]", [](const NamedResult& r) { return r.machine.cycle_time / kNano; });
    param("Ebit_PIM [pJ]", [](const NamedResult& r) { return r.machine.ebit_pim / kPico; });
    param("BW [Gbps]", [](const NamedResult& r) { return to_gbps(r.machine.bw); });
    param("Ebit_CPU [pJ]", [](const NamedResult& r) { return r.machine.ebit_cpu / kPico; });
    if (any_tdp) {
        param("TDP_PIM [W]", [](const NamedResult& r) { return r.machine.tdp_pim.value_or(INFINITY); });
        param("TDP_CPU [W]", [](const NamedResult& r) { return r.machine.tdp_cpu.value_or(INFINITY); });
    }
    param("OC", [](const NamedResult& r) { return r.workload.oc; });
    param("PAC", [](const NamedResult& r) { return r.workload.pac; });
    param("CC", [](const NamedResult& r) { return r.workload.cc(); });
    param("DIO_CPU [bits]", [](const NamedResult& r) { return r.workload.dio_cpu; });
    param("DIO_Combined [bits]", [](const NamedResult& r) { return r.workload.dio_combined; });
    output("TP_PIM [GOPS]", Metric::TpPimGops);
    output("TP_CPU [GOPS]", Metric::TpCpuGops);
    output("TP_Combined [GOPS]", Metric::TpCombinedGops);
    output("P_PIM [W]", Metric::PPimW);
    output("P_CPU [W]", Metric::PCpuW);
    output("P_Combined [W]", Metric::PCombinedW);
    output("EPC_PIM [J/GOP]", Metric::EpcPimJgop);
    output("EPC_CPU [J/GOP]", Metric::EpcCpuJgop);
    output("EPC_Combined [J/GOP]", Metric::EpcCombinedJgop);
    if (any_tdp) {
        output("Throttle_PIM", Metric::ThrottleFactorPim);
        output("Throttle_CPU", Metric::ThrottleFactorCpu);
    }
    return render_columns(header, rows);
}

std::string table_csv(const std::vector<NamedResult>& results) {
    std::ostringstream os;
    const auto& cols = csv_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
    os << '\n';
    for (const auto& r : results) {
        const auto& m = r.machine;
        const auto& w = r.workload;
        os << csv_field(r.name);
        for (double v : {m.xbs, m.rows, m.cols, m.cycle_time, m.ebit_pim, m.bw, m.ebit_cpu, w.oc, w.pac, w.cc(),
                         w.dio_cpu, w.dio_combined})
            os << ',' << format_number(v);
        for (Metric metric : primary_metrics()) os << ',' << format_number(metric_value(metric, m, w, r.result));
        os << '\n';
    }
    return os.str();
}

double read_number(const nlohmann::json& j, const char* key, const std::string& path) {
    if (!j.contains(key)) throw ValidationError(path + "." + key, "missing");
    const auto& v = j.at(key);
    if (v.is_null()) return INFINITY;
    if (!v.is_number()) throw ValidationError(path + "." + key, "expected a number");
    return v.get<double>();
}

std::optional<double> read_optional(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<double>();
}

}  // namespace

std::optional<Format> parse_format(std::string_view s) {
    if (s == "text" || s == "table") return Format::Text;
    if (s == "csv") return Format::Csv;
    if (s == "json") return Format::Json;
    return std::nullopt;
}

NamedResult evaluate_named(std::string name, const MachineConfig& m, const WorkloadProfile& w) {
    return {std::move(name), m, w, engine::evaluate(m, w)};
}

std::string format_number(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

const std::vector<std::string>& csv_columns() {
    static const std::vector<std::string> cols = [] {
        std::vector<std::string> c{"name",     "xbs", "rows", "cols", "cycle_time", "ebit_pim",     "bw",
                                   "ebit_cpu", "oc",  "pac",  "cc",   "dio_cpu",    "dio_combined"};
        for (Metric m : primary_metrics()) c.emplace_back(metric_id(m));
        return c;
    }();
    return cols;
}

std::string emit_table(const std::vector<NamedResult>& results, Format format) {
    switch (format) {
        case Format::Text: return table_text(results);
        case Format::Csv: return table_csv(results);
        case Format::Json: {
            ojson j = ojson::object();
            j["results"] = ojson::array();
            for (const auto& r : results) j["results"].push_back(detail::named_to_json(r));
            return j.dump(2) + "\n";
        }
    }
    return {};
}

std::vector<NamedResult> parse_results_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError("document", e.what());
    }
    if (!j.is_object() || !j.contains("results") || !j.at("results").is_array())
        throw ValidationError("results", "expected {\"results\": [...]}");
    std::vector<NamedResult> out;
    for (std::size_t i = 0; i < j.at("results").size(); ++i) {
        const auto& rj = j.at("results")[i];
        const std::string path = "results[" + std::to_string(i) + "]";
        NamedResult r;
        r.name = rj.value("name", "");
        const auto& mj = rj.at("machine");
        r.machine.xbs = read_number(mj, "xbs", path);
        r.machine.rows = read_number(mj, "rows", path);
        r.machine.cols = read_number(mj, "cols", path);
        r.machine.cycle_time = read_number(mj, "cycle_time", path);
        r.machine.ebit_pim = read_number(mj, "ebit_pim", path);
        r.machine.bw = read_number(mj, "bw", path);
        r.machine.ebit_cpu = read_number(mj, "ebit_cpu", path);
        r.machine.tdp_pim = read_optional(mj, "tdp_pim");
        r.machine.tdp_cpu = read_optional(mj, "tdp_cpu");
        const auto& wj = rj.at("workload");
        r.workload.oc = read_number(wj, "oc", path);
        r.workload.pac = read_number(wj, "pac", path);
        r.workload.dio_cpu = read_number(wj, "dio_cpu", path);
        r.workload.dio_combined = read_number(wj, "dio_combined", path);
        r.workload.label = wj.value("label", "");
        const auto& res = rj.at("result");
        auto& e = r.result;
        e.tp_pim = read_number(res, "tp_pim", path);
        e.tp_cpu = read_number(res, "tp_cpu", path);
        e.tp_cpu_side = read_number(res, "tp_cpu_side", path);
        e.tp_combined = read_number(res, "tp_combined", path);
        e.p_pim = read_number(res, "p_pim", path);
        e.p_cpu = read_number(res, "p_cpu", path);
        e.p_combined = read_number(res, "p_combined", path);
        e.epc_pim = read_number(res, "epc_pim", path);
        e.epc_cpu = read_number(res, "epc_cpu", path);
        e.epc_cpu_side = read_number(res, "epc_cpu_side", path);
        e.epc_combined = read_number(res, "epc_combined", path);
        e.duty_pim = read_number(res, "duty_pim", path);
        e.duty_cpu = read_number(res, "duty_cpu", path);
        e.throttle_factor_pim = read_number(res, "throttle_factor_pim", path);
        e.throttle_factor_cpu = read_number(res, "throttle_factor_cpu", path);
        e.pim_tdp_bound = res.value("pim_tdp_bound", false);
        e.cpu_tdp_bound = res.value("cpu_tdp_bound", false);
        out.push_back(std::move(r));
    }
    return out;
}

std::string emit_sweep(const sweep::SweepGrid& grid, Format format) {
    if (format == Format::Json) return detail::sweep_to_json(grid).dump(2) + "\n";
    std::ostringstream os;
    for (const auto& a : grid.axes) os << sweep::to_string(a.param) << ',';
    for (std::size_t i = 0; i < grid.metrics.size(); ++i) os << (i ? "," : "") << metric_id(grid.metrics[i]);
    os << '\n';
    const std::size_t inner = grid.coords.size() == 2 ? grid.coords[1].size() : 1;
    for (std::size_t c = 0; c < grid.size(); ++c) {
        os << format_number(grid.coords[0][c / inner]) << ',';
        if (grid.coords.size() == 2) os << format_number(grid.coords[1][c % inner]) << ',';
        for (std::size_t i = 0; i < grid.metrics.size(); ++i)
            os << (i ? "," : "") << format_number(grid.value(c, grid.metrics[i]));
        os << '\n';
    }
    return os.str();
}

std::string emit_iso_lines(const std::vector<sweep::IsoLine>& lines, Format format) {
    if (format == Format::Json) return detail::iso_lines_to_json(lines).dump(2) + "\n";
    std::ostringstream os;
    os << "metric,level,cc,dio\n";
    for (const auto& l : lines)
        for (const auto& p : l.samples)
            os << metric_id(l.metric) << ',' << format_number(l.level) << ',' << format_number(p.cc) << ','
               << format_number(p.dio) << '\n';
    return os.str();
}

std::string emit_crossover(const sweep::CrossoverCurve& curve, Format format) {
    if (format == Format::Json) return detail::crossover_to_json(curve).dump(2) + "\n";
    std::ostringstream os;
    os << "bw_gbps,xbs_throughput,xbs_power\n";
    for (const auto& p : curve.points) {
        os << format_number(to_gbps(p.bw)) << ',';
        if (p.xbs_throughput) os << format_number(*p.xbs_throughput);
        os << ',';
        if (p.xbs_power) os << format_number(*p.xbs_power);
        os << '\n';
    }
    return os.str();
}

std::string emit_report(const scenarios::ScenarioReport& report, Format format) {
    if (format == Format::Json) return detail::report_to_json(report).dump(2) + "\n";
    std::ostringstream os;
    os << report.id << ": " << report.description << '\n';
    if (format == Format::Csv) {
        os.str("");
        os << "id,metric,expected,decimals,computed,pass,citation\n";
        for (const auto& c : report.checks)
            os << csv_field(report.id) << ',' << metric_id(c.expectation.metric) << ','
               << format_number(c.expectation.value) << ',' << c.expectation.decimals << ','
               << format_number(c.computed) << ',' << (c.pass ? "pass" : "FAIL") << ','
               << csv_field(c.expectation.citation) << '\n';
        return os.str();
    }
    std::vector<Row> rows;
    for (const auto& c : report.checks) {
        std::string tol = c.expectation.rel_tol ? "rel " + display(*c.expectation.rel_tol)
                                                : std::to_string(c.expectation.decimals) + " dp";
        rows.push_back({std::string(metric_id(c.expectation.metric)),
                        {display(c.expectation.value), tol, display(c.computed), c.pass ? "pass" : "FAIL",
                         c.expectation.citation}});
    }
    if (!rows.empty()) os << render_columns({"expected", "precision", "computed", "status", "source"}, rows);
    const auto passed = std::count_if(report.checks.begin(), report.checks.end(), [](const auto& c) { return c.pass; });
    os << (report.passed() ? "PASS" : "FAIL") << " (" << passed << "/" << report.checks.size()
       << " expectations)\n";
    return os.str();
}

std::string emit_catalog(const std::vector<scenarios::Scenario>& catalog, Format format) {
    if (format == Format::Json) return detail::catalog_to_json(catalog).dump(2) + "\n";
    std::ostringstream os;
    if (format == Format::Csv) {
        os << "id,description,expectations\n";
        for (const auto& s : catalog)
            os << csv_field(s.id) << ',' << csv_field(s.description) << ',' << s.expected.size() << '\n';
        return os.str();
    }
    std::size_t w = 0;
    for (const auto& s : catalog) w = std::max(w, s.id.size());
    for (const auto& s : catalog)
        os << std::left << std::setw(static_cast<int>(w)) << s.id << "  " << s.description << '\n';
    return os.str();
}

std::string emit_errors(const std::vector<FieldError>& errors) { return detail::errors_to_json(errors).dump(2) + "\n"; }

}  // namespace bitlet::emit
