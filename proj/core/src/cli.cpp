#include "bitlet/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "bitlet/config.hpp"
#include "bitlet/emit.hpp"
#include "bitlet/scenarios.hpp"
#include "bitlet/service.hpp"
#include "bitlet/sweep.hpp"

namespace bitlet::cli {

namespace {

struct Options {
    std::vector<std::string> configs;
    std::string format;
    std::vector<std::string> axes;
    std::vector<std::string> metrics;
    std::vector<std::string> levels;
    std::string scenario_id;
    std::string tolerance_mode = "displayed";
    std::vector<std::string> expects;
    std::string host = "127.0.0.1";
    int port = 8080;
};

emit::Format format_or(const std::string& f, emit::Format fallback) {
    if (f.empty()) return fallback;
    return *emit::parse_format(f);
}

std::string column_name(const std::string& path, const WorkloadProfile& w) {
    if (!w.label.empty()) return w.label;
    return std::filesystem::path(path).stem().string();
}

emit::NamedResult evaluate_file(const std::string& path) {
    const auto doc = config::load_config_file(path);
    const auto [m, w] = config::resolve(doc);
    return emit::evaluate_named(column_name(path, w), m, w);
}

int cmd_eval(const Options& o, std::ostream& out) {
    out << emit::emit_table({evaluate_file(o.configs.front())}, format_or(o.format, emit::Format::Text));
    return kExitOk;
}

int cmd_compare(const Options& o, std::ostream& out) {
    std::vector<emit::NamedResult> results;
    for (const auto& path : o.configs) results.push_back(evaluate_file(path));
    out << emit::emit_table(results, format_or(o.format, emit::Format::Text));
    return kExitOk;
}

std::vector<Metric> parse_metrics(const std::vector<std::string>& ids) {
    std::vector<Metric> out;
    for (const auto& id : ids) {
        auto m = parse_metric(id);
        if (!m) throw ValidationError("metric", "unknown metric '" + id + "'");
        out.push_back(*m);
    }
    return out;
}

int cmd_sweep(const Options& o, std::ostream& out) {
    const auto doc = config::load_config_file(o.configs.front());
    const auto [m, w] = config::resolve(doc);
    std::vector<sweep::AxisSpec> axes;
    std::vector<Metric> metrics = parse_metrics(o.metrics);
    for (const auto& a : o.axes) axes.push_back(config::parse_axis_arg(a));
    if (axes.empty() && doc.sweep) axes = doc.sweep->axes;
    if (metrics.empty() && doc.sweep) metrics = doc.sweep->metrics;
    if (axes.empty()) throw ValidationError("axis", "give --axis or a sweep section in the config");
    const auto grid = sweep::grid_sweep(m, w, axes, metrics);
    out << emit::emit_sweep(grid, format_or(o.format, emit::Format::Csv));
    return kExitOk;
}

int cmd_contour(const Options& o, std::ostream& out) {
    const auto doc = config::load_config_file(o.configs.front());
    const MachineConfig m =
        std::holds_alternative<std::monostate>(doc.workload) ? doc.machine : config::resolve(doc).first;
    config::ContourSection section = doc.contour.value_or(config::ContourSection{});
    if (!o.metrics.empty()) {
        if (o.metrics.size() > 1) throw ValidationError("metric", "contour takes one metric");
        section.metric = parse_metrics(o.metrics).front();
    }
    if (!o.levels.empty()) {
        section.levels.clear();
        const auto dim = section.metric == Metric::PCombinedW ? config::Dimension::Power : config::Dimension::Count;
        for (const auto& l : o.levels) section.levels.push_back(config::parse_quantity(l, dim, "level"));
    }
    if (section.levels.empty()) throw ValidationError("level", "give --level or contour.levels in the config");
    std::vector<sweep::IsoLine> lines;
    for (double level : section.levels) lines.push_back(sweep::iso_line_cc_dio(m, section.metric, level, section.window));
    out << emit::emit_iso_lines(lines, format_or(o.format, emit::Format::Csv));
    return kExitOk;
}

int cmd_crossover(const Options& o, std::ostream& out) {
    const auto doc = config::load_config_file(o.configs.front());
    const auto [m, w] = config::resolve(doc);
    sweep::AxisSpec bw = doc.crossover.value_or(config::CrossoverSection{}).bw;
    if (!o.axes.empty()) {
        if (o.axes.size() > 1) throw ValidationError("axis", "crossover takes one bw axis");
        bw = config::parse_axis_arg(o.axes.front());
        if (bw.param != sweep::AxisParam::Bw) throw ValidationError("axis", "crossover axis must be bw");
    }
    const auto curve = sweep::crossover_xbs_bw(m, w.cc(), w.dio_cpu, w.dio_combined, sweep::axis_values(bw));
    out << emit::emit_crossover(curve, format_or(o.format, emit::Format::Csv));
    return kExitOk;
}

int cmd_scenario(const Options& o, std::ostream& out) {
    const auto mode = scenarios::parse_compare_mode(o.tolerance_mode);
    if (!mode) throw ValidationError("tolerance-mode", "expected displayed or rel:<tolerance>");
    std::vector<scenarios::Expectation> overrides;
    for (const auto& e : o.expects) overrides.push_back(scenarios::parse_expectation(e));
    const auto report = scenarios::run_scenario(o.scenario_id, *mode, overrides);
    out << emit::emit_report(report, format_or(o.format, emit::Format::Text));
    return report.passed() ? kExitOk : kExitExpectationFailed;
}

int cmd_list(const Options& o, std::ostream& out) {
    out << emit::emit_catalog(scenarios::list_scenarios(), format_or(o.format, emit::Format::Text));
    return kExitOk;
}

int cmd_serve(const Options& o, std::ostream& out, std::ostream& err) {
    service::Server server;
    const int port = server.bind(o.host, o.port);
    if (port < 0) {
        err << "error: cannot bind " << o.host << ":" << o.port << '\n';
        return kExitUsage;
    }
    out << "listening on http://" << o.host << ":" << port << std::endl;
    return server.listen() ? kExitOk : kExitUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Analytical PIM/CPU throughput, power and energy model"};
    app.require_subcommand(1);
    Options o;
    const auto formats = CLI::IsMember({"text", "table", "csv", "json"});

    auto* eval = app.add_subcommand("eval", "Evaluate one config and print a table");
    eval->add_option("--config,config", o.configs, "Config file (JSON)")->required()->expected(1);
    eval->add_option("--format", o.format, "text, csv or json")->check(formats);

    auto* compare = app.add_subcommand("compare", "Evaluate several configs side by side");
    compare->add_option("--config,config", o.configs, "Config files (JSON)")->required();
    compare->add_option("--format", o.format, "text, csv or json")->check(formats);

    auto* sweep = app.add_subcommand("sweep", "Evaluate a 1-D or 2-D parameter grid");
    sweep->add_option("--config", o.configs, "Config file (JSON)")->required()->expected(1);
    sweep->add_option("--axis", o.axes, "id:min:max:scale:points or id=v1,v2,...");
    sweep->add_option("--metric", o.metrics, "Metric ids to output");
    sweep->add_option("--format", o.format, "csv or json")->check(formats);

    auto* contour = app.add_subcommand("contour", "Iso-lines in the (CC, DIO) plane");
    contour->add_option("--config", o.configs, "Config file (JSON)")->required()->expected(1);
    contour->add_option("--metric", o.metrics, "tp_combined_gops or p_combined_w");
    contour->add_option("--level", o.levels, "Level in GOPS or W");
    contour->add_option("--format", o.format, "csv or json")->check(formats);

    auto* crossover = app.add_subcommand("crossover", "XBs where combined equals CPU pure, per BW");
    crossover->add_option("--config", o.configs, "Config file (JSON)")->required()->expected(1);
    crossover->add_option("--axis", o.axes, "bw:min:max:scale:points or bw=v1,v2,...");
    crossover->add_option("--format", o.format, "csv or json")->check(formats);

    auto* scenario = app.add_subcommand("scenario", "Run a built-in scenario and check its expectations");
    scenario->add_option("id", o.scenario_id, "Scenario id")->required();
    scenario->add_option("--tolerance-mode", o.tolerance_mode, "displayed (default) or rel:<tolerance>");
    scenario->add_option("--expect", o.expects, "Extra or replacement expectation metric=value[:decimals]");
    scenario->add_option("--format", o.format, "text, csv or json")->check(formats);

    auto* list = app.add_subcommand("list-scenarios", "List built-in scenarios");
    list->add_option("--format", o.format, "text, csv or json")->check(formats);

    auto* serve = app.add_subcommand("serve", "Start the HTTP service");
    serve->add_option("--port", o.port, "TCP port (0 picks a free one)")->check(CLI::Range(0, 65535));
    serve->add_option("--host", o.host, "Bind address");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (eval->parsed()) return cmd_eval(o, out);
        if (compare->parsed()) return cmd_compare(o, out);
        if (sweep->parsed()) return cmd_sweep(o, out);
        if (contour->parsed()) return cmd_contour(o, out);
        if (crossover->parsed()) return cmd_crossover(o, out);
        if (scenario->parsed()) return cmd_scenario(o, out);
        if (list->parsed()) return cmd_list(o, out);
        if (serve->parsed()) return cmd_serve(o, out, err);
    } catch (const ValidationError& e) {
        for (const auto& fe : e.errors()) err << "error: " << fe.field << ": " << fe.message << '\n';
        return kExitUsage;
    } catch (const scenarios::UnknownScenario& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace bitlet::cli
