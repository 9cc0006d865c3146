#include "bitlet/config.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "bitlet/scenarios.hpp"
#include "json.hpp"

namespace bitlet::config {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

struct Unit {
    std::string_view suffix;
    Dimension dim;
    int exponent;
};

constexpr std::array<Unit, 25> kUnits{{
    {"s", Dimension::Time, 0},        {"ms", Dimension::Time, -3},      {"us", Dimension::Time, -6},
    {"ns", Dimension::Time, -9},      {"ps", Dimension::Time, -12},     {"fs", Dimension::Time, -15},
    {"J", Dimension::Energy, 0},      {"mJ", Dimension::Energy, -3},    {"uJ", Dimension::Energy, -6},
    {"nJ", Dimension::Energy, -9},    {"pJ", Dimension::Energy, -12},   {"fJ", Dimension::Energy, -15},
    {"aJ", Dimension::Energy, -18},   {"bps", Dimension::Bandwidth, 0}, {"kbps", Dimension::Bandwidth, 3},
    {"Mbps", Dimension::Bandwidth, 6}, {"Gbps", Dimension::Bandwidth, 9}, {"Tbps", Dimension::Bandwidth, 12},
    {"Pbps", Dimension::Bandwidth, 15}, {"W", Dimension::Power, 0},     {"mW", Dimension::Power, -3},
    {"kW", Dimension::Power, 3},      {"MW", Dimension::Power, 6},      {"bit", Dimension::Bits, 0},
    {"bits", Dimension::Bits, 0},
}};

std::string_view dimension_name(Dimension d) {
    switch (d) {
        case Dimension::Count: return "a plain number";
        case Dimension::Bits: return "bits";
        case Dimension::Time: return "time";
        case Dimension::Energy: return "energy";
        case Dimension::Bandwidth: return "bandwidth";
        case Dimension::Power: return "power";
    }
    return "?";
}

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

std::string join_path(const std::string& a, const std::string& b) { return a.empty() ? b : a + "." + b; }

// Collects field errors while walking one document.
class Reader {
public:
    std::vector<FieldError> errors;

    void fail(const std::string& path, const std::string& msg) { errors.push_back({path, msg}); }

    void absorb(const std::string& prefix, const ValidationError& e) {
        for (const auto& fe : e.errors()) fail(join_path(prefix, fe.field), fe.message);
    }

    bool object(const json& j, const std::string& path) {
        if (j.is_object()) return true;
        fail(path, "expected an object");
        return false;
    }

    void only_keys(const json& j, const std::string& path, std::initializer_list<std::string_view> allowed) {
        for (const auto& [key, value] : j.items()) {
            if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
                fail(join_path(path, key), "unknown key");
        }
    }

    std::optional<double> number(const json& j, const std::string& key, const std::string& path, Dimension dim) {
        if (!j.contains(key)) return std::nullopt;
        const auto field = join_path(path, key);
        const auto& v = j.at(key);
        return value_of(v, field, dim);
    }

    std::optional<double> value_of(const json& v, const std::string& field, Dimension dim) {
        if (v.is_number()) return v.get<double>();
        if (v.is_string()) {
            try {
                return parse_quantity(v.get<std::string>(), dim, field);
            } catch (const ValidationError& e) {
                for (const auto& fe : e.errors()) fail(fe.field, fe.message);
                return std::nullopt;
            }
        }
        fail(field, "expected a number or a string with a unit");
        return std::nullopt;
    }

    std::optional<std::string> string(const json& j, const std::string& key, const std::string& path) {
        if (!j.contains(key)) return std::nullopt;
        if (!j.at(key).is_string()) {
            fail(join_path(path, key), "expected a string");
            return std::nullopt;
        }
        return j.at(key).get<std::string>();
    }

    std::optional<bool> boolean(const json& j, const std::string& key, const std::string& path) {
        if (!j.contains(key)) return std::nullopt;
        if (!j.at(key).is_boolean()) {
            fail(join_path(path, key), "expected true or false");
            return std::nullopt;
        }
        return j.at(key).get<bool>();
    }

    std::optional<int> integer(const json& j, const std::string& key, const std::string& path) {
        if (!j.contains(key)) return std::nullopt;
        const auto& v = j.at(key);
        if (!v.is_number_integer()) {
            fail(join_path(path, key), "expected an integer");
            return std::nullopt;
        }
        return v.get<int>();
    }
};

void read_machine(Reader& rd, const json& j, MachineConfig& m) {
    const std::string path = "machine";
    if (!rd.object(j, path)) return;
    rd.only_keys(j, path,
                 {"xbs", "rows", "cols", "cycle_time", "ebit_pim", "bw", "ebit_cpu", "tdp_pim", "tdp_cpu"});
    const auto set = [&](const char* key, Dimension dim, double& out) {
        if (auto v = rd.number(j, key, path, dim)) out = *v;
    };
    set("xbs", Dimension::Count, m.xbs);
    set("rows", Dimension::Count, m.rows);
    set("cols", Dimension::Count, m.cols);
    set("cycle_time", Dimension::Time, m.cycle_time);
    set("ebit_pim", Dimension::Energy, m.ebit_pim);
    set("bw", Dimension::Bandwidth, m.bw);
    set("ebit_cpu", Dimension::Energy, m.ebit_cpu);
    if (auto v = rd.number(j, "tdp_pim", path, Dimension::Power)) m.tdp_pim = *v;
    if (auto v = rd.number(j, "tdp_cpu", path, Dimension::Power)) m.tdp_cpu = *v;
}

WorkloadProfile read_explicit(Reader& rd, const json& j) {
    const std::string path = "workload";
    rd.only_keys(j, path, {"oc", "pac", "cc", "dio_cpu", "dio_combined", "label"});
    WorkloadProfile w;
    if (auto v = rd.number(j, "oc", path, Dimension::Count)) w.oc = *v;
    if (auto v = rd.number(j, "pac", path, Dimension::Count)) w.pac = *v;
    if (auto v = rd.number(j, "cc", path, Dimension::Count)) {
        if (j.contains("oc") || j.contains("pac"))
            rd.fail("workload.cc", "cc cannot be combined with oc or pac");
        w.oc = *v;
        w.pac = 0;
    }
    if (auto v = rd.number(j, "dio_cpu", path, Dimension::Bits)) w.dio_cpu = *v;
    if (auto v = rd.number(j, "dio_combined", path, Dimension::Bits)) w.dio_combined = *v;
    if (auto v = rd.string(j, "label", path)) w.label = *v;
    return w;
}

complexity::ComplexitySpec read_complexity(Reader& rd, const json& j, double machine_rows) {
    const std::string path = "workload.complexity";
    complexity::ComplexitySpec spec;
    if (!rd.object(j, path)) return spec;
    rd.only_keys(j, path, {"op", "width", "layout", "rows", "exact", "cycles"});
    if (auto op = rd.string(j, "op", path)) {
        if (auto k = complexity::parse_op_kind(*op))
            spec.op.kind = *k;
        else
            rd.fail(path + ".op", "unknown operation '" + *op + "'");
    } else {
        rd.fail(path + ".op", "required");
    }
    if (auto v = rd.number(j, "cycles", path, Dimension::Count)) {
        if (spec.op.kind != complexity::OpKind::Custom)
            rd.fail(path + ".cycles", "only allowed with op CUSTOM");
        spec.op.custom_cycles = *v;
    } else if (spec.op.kind == complexity::OpKind::Custom) {
        rd.fail(path + ".cycles", "required for op CUSTOM");
    }
    if (auto v = rd.number(j, "width", path, Dimension::Bits)) spec.width = *v;
    if (auto l = rd.string(j, "layout", path)) {
        if (auto k = complexity::parse_layout(*l))
            spec.layout = *k;
        else
            rd.fail(path + ".layout", "unknown layout '" + *l + "'");
    }
    if (auto v = rd.number(j, "rows", path, Dimension::Count))
        spec.rows = *v;
    else if (spec.layout != complexity::LayoutClass::ParallelAligned)
        spec.rows = machine_rows;
    if (auto v = rd.boolean(j, "exact", path)) spec.exact = *v;
    return spec;
}

usecases::UseCase read_usecase(Reader& rd, const json& j, double machine_rows) {
    const std::string path = "workload.usecase";
    if (!rd.object(j, path)) return usecases::CpuPure{};
    const auto kind = rd.string(j, "kind", path);
    if (!kind) {
        rd.fail(path + ".kind", "required");
        return usecases::CpuPure{};
    }
    const auto num = [&](const char* key, double fallback) {
        auto v = rd.number(j, key, path, key == std::string_view("p") ? Dimension::Count : Dimension::Bits);
        return v.value_or(fallback);
    };
    const std::string& k = *kind;
    if (k == "cpu_pure") {
        rd.only_keys(j, path, {"kind", "s"});
        return usecases::CpuPure{num("s", 0)};
    }
    if (k == "cpu_pure_two_pass") {
        rd.only_keys(j, path, {"kind", "s", "s1", "p"});
        return usecases::CpuPureTwoPass{num("s", 0), num("s1", 0), num("p", 0)};
    }
    if (k == "pim_pure") {
        rd.only_keys(j, path, {"kind", "s"});
        return usecases::PimPure{num("s", 0)};
    }
    if (k == "compact") {
        rd.only_keys(j, path, {"kind", "s", "s1"});
        return usecases::Compact{num("s", 0), num("s1", 0)};
    }
    if (k == "filter1") {
        rd.only_keys(j, path, {"kind", "s", "p"});
        return usecases::Filter1{num("s", 0), num("p", 0)};
    }
    if (k == "filter2") {
        rd.only_keys(j, path, {"kind", "s", "p", "ceil_index_bits"});
        usecases::Filter2 f{num("s", 0), num("p", 0), false};
        if (auto b = rd.boolean(j, "ceil_index_bits", path)) f.ceil_index_bits = *b;
        return f;
    }
    if (k == "hybrid") {
        rd.only_keys(j, path, {"kind", "s", "s1", "p"});
        return usecases::Hybrid{num("s", 0), num("s1", 0), num("p", 0)};
    }
    if (k == "reduction0") {
        rd.only_keys(j, path, {"kind", "s", "s1"});
        return usecases::Reduction0{num("s", 0), num("s1", 0)};
    }
    if (k == "reduction1") {
        rd.only_keys(j, path, {"kind", "s", "s1", "r"});
        auto r = rd.number(j, "r", path, Dimension::Count);
        return usecases::Reduction1{num("s", 0), num("s1", 0), r.value_or(machine_rows)};
    }
    rd.fail(path + ".kind", "unknown use case '" + k + "'");
    return usecases::CpuPure{};
}

DeclarativeWorkload read_declarative(Reader& rd, const json& j, double machine_rows) {
    const std::string path = "workload";
    rd.only_keys(j, path, {"complexity", "usecase", "n", "label"});
    DeclarativeWorkload d;
    if (j.contains("complexity"))
        d.complexity = read_complexity(rd, j.at("complexity"), machine_rows);
    else
        rd.fail("workload.complexity", "required in a declarative workload");
    if (j.contains("usecase"))
        d.usecase = read_usecase(rd, j.at("usecase"), machine_rows);
    else
        rd.fail("workload.usecase", "required in a declarative workload");
    if (auto v = rd.number(j, "n", path, Dimension::Count)) d.n = *v;
    if (auto v = rd.string(j, "label", path)) d.label = *v;
    return d;
}

std::optional<sweep::Scale> parse_scale(std::string_view s) {
    if (s == "log") return sweep::Scale::Log;
    if (s == "linear" || s == "lin") return sweep::Scale::Linear;
    return std::nullopt;
}

std::string_view scale_name(sweep::Scale s) { return s == sweep::Scale::Log ? "log" : "linear"; }

// Axis object; when `fixed` is set the param key is not accepted.
sweep::AxisSpec read_axis(Reader& rd, const json& j, const std::string& path,
                          std::optional<sweep::AxisParam> fixed) {
    sweep::AxisSpec axis;
    if (!rd.object(j, path)) return axis;
    if (fixed) {
        rd.only_keys(j, path, {"min", "max", "points", "scale", "values"});
        axis.param = *fixed;
    } else {
        rd.only_keys(j, path, {"param", "min", "max", "points", "scale", "values"});
        if (auto p = rd.string(j, "param", path)) {
            if (auto ap = sweep::parse_axis_param(*p))
                axis.param = *ap;
            else
                rd.fail(path + ".param", "unknown axis parameter '" + *p + "'");
        } else {
            rd.fail(path + ".param", "required");
        }
    }
    const Dimension dim = dimension_of(axis.param);
    if (j.contains("values")) {
        for (const char* key : {"min", "max", "points", "scale"})
            if (j.contains(key)) rd.fail(join_path(path, key), "not allowed together with values");
        const auto& vals = j.at("values");
        if (!vals.is_array() || vals.empty()) {
            rd.fail(path + ".values", "expected a non-empty array");
        } else {
            for (std::size_t i = 0; i < vals.size(); ++i)
                if (auto v = rd.value_of(vals[i], path + ".values[" + std::to_string(i) + "]", dim))
                    axis.explicit_values.push_back(*v);
        }
        return axis;
    }
    if (auto v = rd.number(j, "min", path, dim))
        axis.min = *v;
    else
        rd.fail(path + ".min", "required");
    if (auto v = rd.number(j, "max", path, dim))
        axis.max = *v;
    else
        rd.fail(path + ".max", "required");
    if (auto v = rd.integer(j, "points", path)) axis.points = *v;
    if (auto s = rd.string(j, "scale", path)) {
        if (auto sc = parse_scale(*s))
            axis.scale = *sc;
        else
            rd.fail(path + ".scale", "expected log or linear");
    }
    try {
        sweep::validate(axis);
    } catch (const ValidationError& e) {
        for (const auto& fe : e.errors()) rd.fail(path, fe.message);
    }
    return axis;
}

SweepSection read_sweep(Reader& rd, const json& j) {
    SweepSection s;
    if (!rd.object(j, "sweep")) return s;
    rd.only_keys(j, "sweep", {"axes", "metrics"});
    if (!j.contains("axes") || !j.at("axes").is_array() || j.at("axes").empty() || j.at("axes").size() > 2) {
        rd.fail("sweep.axes", "expected an array of 1 or 2 axes");
    } else {
        const auto& axes = j.at("axes");
        for (std::size_t i = 0; i < axes.size(); ++i)
            s.axes.push_back(read_axis(rd, axes[i], "sweep.axes[" + std::to_string(i) + "]", std::nullopt));
    }
    if (j.contains("metrics")) {
        const auto& ms = j.at("metrics");
        if (!ms.is_array()) {
            rd.fail("sweep.metrics", "expected an array of metric ids");
        } else {
            for (std::size_t i = 0; i < ms.size(); ++i) {
                const auto field = "sweep.metrics[" + std::to_string(i) + "]";
                const auto m = ms[i].is_string() ? parse_metric(ms[i].get<std::string>()) : std::nullopt;
                if (m)
                    s.metrics.push_back(*m);
                else
                    rd.fail(field, "unknown metric");
            }
        }
    }
    return s;
}

ContourSection read_contour(Reader& rd, const json& j) {
    ContourSection c;
    if (!rd.object(j, "contour")) return c;
    rd.only_keys(j, "contour", {"metric", "levels", "window"});
    if (auto m = rd.string(j, "metric", "contour")) {
        auto metric = parse_metric(*m);
        if (metric == Metric::TpCombinedGops || metric == Metric::PCombinedW)
            c.metric = *metric;
        else
            rd.fail("contour.metric", "expected tp_combined_gops or p_combined_w");
    }
    const Dimension dim = c.metric == Metric::PCombinedW ? Dimension::Power : Dimension::Count;
    if (j.contains("levels")) {
        const auto& lv = j.at("levels");
        if (!lv.is_array()) {
            rd.fail("contour.levels", "expected an array");
        } else {
            for (std::size_t i = 0; i < lv.size(); ++i)
                if (auto v = rd.value_of(lv[i], "contour.levels[" + std::to_string(i) + "]", dim))
                    c.levels.push_back(*v);
        }
    }
    if (j.contains("window")) {
        const auto& w = j.at("window");
        if (rd.object(w, "contour.window")) {
            rd.only_keys(w, "contour.window", {"cc_min", "cc_max", "dio_min", "dio_max", "points"});
            const std::string p = "contour.window";
            if (auto v = rd.number(w, "cc_min", p, Dimension::Count)) c.window.cc_min = *v;
            if (auto v = rd.number(w, "cc_max", p, Dimension::Count)) c.window.cc_max = *v;
            if (auto v = rd.number(w, "dio_min", p, Dimension::Bits)) c.window.dio_min = *v;
            if (auto v = rd.number(w, "dio_max", p, Dimension::Bits)) c.window.dio_max = *v;
            if (auto v = rd.integer(w, "points", p)) c.window.points = *v;
            if (!(c.window.cc_min > 0 && c.window.cc_min < c.window.cc_max))
                rd.fail(p, "need 0 < cc_min < cc_max");
            if (!(c.window.dio_min > 0 && c.window.dio_min < c.window.dio_max))
                rd.fail(p, "need 0 < dio_min < dio_max");
            if (c.window.points < 2) rd.fail(p + ".points", "must be >= 2");
        }
    }
    return c;
}

void check_machine(Reader& rd, const MachineConfig& m) {
    try {
        validate_machine(m);
    } catch (const ValidationError& e) {
        rd.absorb("machine", e);
    }
}

void check_declarative(Reader& rd, const DeclarativeWorkload& d) {
    try {
        (void)complexity::compile(d.complexity);
    } catch (const ValidationError& e) {
        rd.absorb("workload.complexity", e);
    }
    try {
        usecases::validate(d.usecase, d.n);
    } catch (const ValidationError& e) {
        rd.absorb("workload.usecase", e);
    }
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

ojson render_axis(const sweep::AxisSpec& a, bool with_param) {
    ojson j = ojson::object();
    if (with_param) j["param"] = std::string(sweep::to_string(a.param));
    if (!a.explicit_values.empty()) {
        j["values"] = a.explicit_values;
        return j;
    }
    j["min"] = a.min;
    j["max"] = a.max;
    j["points"] = a.points;
    j["scale"] = std::string(scale_name(a.scale));
    return j;
}

ojson render_usecase(const usecases::UseCase& uc) {
    ojson j = ojson::object();
    j["kind"] = std::string(usecases::name_of(uc));
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            j["s"] = v.s;
            if constexpr (requires { v.s1; }) j["s1"] = v.s1;
            if constexpr (requires { v.p; }) j["p"] = v.p;
            if constexpr (requires { v.r; }) j["r"] = v.r;
            if constexpr (std::is_same_v<T, usecases::Filter2>) j["ceil_index_bits"] = v.ceil_index_bits;
        },
        uc);
    return j;
}

}  // namespace

SyntaxError::SyntaxError(std::size_t line, std::size_t column, const std::string& detail)
    : ValidationError("document",
                      "syntax error at line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                          detail),
      line_(line),
      column_(column) {}

Dimension dimension_of(sweep::AxisParam p) {
    switch (p) {
        case sweep::AxisParam::Cc:
        case sweep::AxisParam::Xbs:
        case sweep::AxisParam::Rows: return Dimension::Count;
        case sweep::AxisParam::DioCombined:
        case sweep::AxisParam::DioCpu: return Dimension::Bits;
        case sweep::AxisParam::Bw: return Dimension::Bandwidth;
        case sweep::AxisParam::Ct: return Dimension::Time;
        case sweep::AxisParam::EbitPim:
        case sweep::AxisParam::EbitCpu: return Dimension::Energy;
    }
    return Dimension::Count;
}

double parse_quantity(std::string_view raw, Dimension dim, const std::string& field) {
    const std::string text = trim(raw);
    std::size_t i = 0;
    while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '.' ||
                               text[i] == '+' || text[i] == '-' ||
                               ((text[i] == 'e' || text[i] == 'E') && i + 1 < text.size() &&
                                (std::isdigit(static_cast<unsigned char>(text[i + 1])) || text[i + 1] == '-' ||
                                 text[i + 1] == '+'))))
        ++i;
    const std::string number = text.substr(0, i);
    const std::string suffix = trim(std::string_view(text).substr(i));
    if (number.empty()) throw ValidationError(field, "expected a number, got '" + text + "'");

    // Shift the decimal exponent in text so "0.29fJ" parses exactly like 0.29e-15.
    int unit_exp = 0;
    if (!suffix.empty()) {
        auto it = std::find_if(kUnits.begin(), kUnits.end(), [&](const Unit& u) { return u.suffix == suffix; });
        if (it == kUnits.end()) throw ValidationError(field, "unknown unit '" + suffix + "'");
        if (it->dim != dim)
            throw ValidationError(field, "unit mismatch: '" + suffix + "' is " + std::string(dimension_name(it->dim)) +
                                             ", expected " + std::string(dimension_name(dim)));
        unit_exp = it->exponent;
    }
    std::string mantissa = number;
    long exp10 = 0;
    if (auto e = number.find_first_of("eE"); e != std::string::npos) {
        mantissa = number.substr(0, e);
        char* end = nullptr;
        const std::string exp_text = number.substr(e + 1);
        exp10 = std::strtol(exp_text.c_str(), &end, 10);
        if (exp_text.empty() || *end != '\0') throw ValidationError(field, "malformed number '" + number + "'");
    }
    const std::string canonical = mantissa + "e" + std::to_string(exp10 + unit_exp);
    char* end = nullptr;
    const double v = std::strtod(canonical.c_str(), &end);
    if (end != canonical.c_str() + canonical.size() || mantissa.empty())
        throw ValidationError(field, "malformed number '" + number + "'");
    if (!std::isfinite(v)) throw ValidationError(field, "value must be finite");
    return v;
}

ConfigDocument parse_config(std::string_view text) {
    json j;
    try {
        j = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_column(text, e.byte);
        std::string detail = e.what();
        if (auto p = detail.find("syntax error"); p != std::string::npos) detail = detail.substr(p);
        throw SyntaxError(line, col, detail);
    }

    Reader rd;
    ConfigDocument doc;
    if (!j.is_object()) throw ValidationError("document", "expected a JSON object");
    rd.only_keys(j, "", {"machine", "workload", "scenario", "sweep", "contour", "crossover"});

    if (j.contains("machine")) read_machine(rd, j.at("machine"), doc.machine);
    check_machine(rd, doc.machine);

    if (j.contains("workload") && j.contains("scenario"))
        rd.fail("scenario", "a document holds either a workload or a scenario, not both");
    if (j.contains("scenario")) {
        if (j.contains("machine")) rd.fail("machine", "a scenario reference brings its own machine");
        if (auto id = rd.string(j, "scenario", "")) {
            try {
                (void)scenarios::find_scenario(*id);
                doc.workload = ScenarioRef{*id};
            } catch (const scenarios::UnknownScenario&) {
                rd.fail("scenario", "unknown scenario '" + *id + "'");
            }
        }
    } else if (j.contains("workload")) {
        const auto& w = j.at("workload");
        if (rd.object(w, "workload")) {
            if (w.contains("complexity") || w.contains("usecase") || w.contains("n")) {
                auto d = read_declarative(rd, w, doc.machine.rows);
                if (rd.errors.empty()) check_declarative(rd, d);
                doc.workload = std::move(d);
            } else {
                auto e = read_explicit(rd, w);
                try {
                    validate_workload(e);
                } catch (const ValidationError& err) {
                    rd.absorb("workload", err);
                }
                doc.workload = std::move(e);
            }
        }
    }

    if (j.contains("sweep")) doc.sweep = read_sweep(rd, j.at("sweep"));
    if (j.contains("contour")) doc.contour = read_contour(rd, j.at("contour"));
    if (j.contains("crossover")) doc.crossover = CrossoverSection{read_axis(rd, j.at("crossover"), "crossover", sweep::AxisParam::Bw)};

    if (!rd.errors.empty()) throw ValidationError(std::move(rd.errors));
    return doc;
}

ConfigDocument load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("config", "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string render_config(const ConfigDocument& doc) {
    ojson j = ojson::object();
    const bool is_scenario = std::holds_alternative<ScenarioRef>(doc.workload);
    if (!is_scenario) {
        const auto& m = doc.machine;
        ojson mj = ojson::object();
        mj["xbs"] = m.xbs;
        mj["rows"] = m.rows;
        mj["cols"] = m.cols;
        mj["cycle_time"] = m.cycle_time;
        mj["ebit_pim"] = m.ebit_pim;
        mj["bw"] = m.bw;
        mj["ebit_cpu"] = m.ebit_cpu;
        if (m.tdp_pim) mj["tdp_pim"] = *m.tdp_pim;
        if (m.tdp_cpu) mj["tdp_cpu"] = *m.tdp_cpu;
        j["machine"] = mj;
    }
    if (const auto* w = std::get_if<WorkloadProfile>(&doc.workload)) {
        ojson wj = ojson::object();
        wj["oc"] = w->oc;
        wj["pac"] = w->pac;
        wj["dio_cpu"] = w->dio_cpu;
        wj["dio_combined"] = w->dio_combined;
        if (!w->label.empty()) wj["label"] = w->label;
        j["workload"] = wj;
    } else if (const auto* d = std::get_if<DeclarativeWorkload>(&doc.workload)) {
        ojson cj = ojson::object();
        cj["op"] = std::string(complexity::to_string(d->complexity.op.kind));
        if (d->complexity.op.kind == complexity::OpKind::Custom) cj["cycles"] = d->complexity.op.custom_cycles;
        cj["width"] = d->complexity.width;
        cj["layout"] = std::string(complexity::to_string(d->complexity.layout));
        if (d->complexity.rows) cj["rows"] = *d->complexity.rows;
        cj["exact"] = d->complexity.exact;
        ojson wj = ojson::object();
        wj["complexity"] = cj;
        wj["usecase"] = render_usecase(d->usecase);
        wj["n"] = d->n;
        if (!d->label.empty()) wj["label"] = d->label;
        j["workload"] = wj;
    } else if (const auto* s = std::get_if<ScenarioRef>(&doc.workload)) {
        j["scenario"] = s->id;
    }
    if (doc.sweep) {
        ojson sj = ojson::object();
        sj["axes"] = ojson::array();
        for (const auto& a : doc.sweep->axes) sj["axes"].push_back(render_axis(a, true));
        if (!doc.sweep->metrics.empty()) {
            sj["metrics"] = ojson::array();
            for (auto m : doc.sweep->metrics) sj["metrics"].push_back(std::string(metric_id(m)));
        }
        j["sweep"] = sj;
    }
    if (doc.contour) {
        const auto& c = *doc.contour;
        ojson cj = ojson::object();
        cj["metric"] = std::string(metric_id(c.metric));
        cj["levels"] = c.levels;
        cj["window"] = {{"cc_min", c.window.cc_min},
                        {"cc_max", c.window.cc_max},
                        {"dio_min", c.window.dio_min},
                        {"dio_max", c.window.dio_max},
                        {"points", c.window.points}};
        j["contour"] = cj;
    }
    if (doc.crossover) j["crossover"] = render_axis(doc.crossover->bw, false);
    return j.dump(2) + "\n";
}

WorkloadProfile resolve_workload(const DeclarativeWorkload& d) {
    const auto cycles = complexity::compile(d.complexity);
    usecases::validate(d.usecase, d.n);
    WorkloadProfile w;
    w.oc = cycles.oc;
    w.pac = cycles.pac;
    w.dio_cpu = usecases::cpu_pure_dio(d.usecase);
    w.dio_combined = usecases::dio_per_computation(d.usecase, d.n);
    w.label = !d.label.empty() ? d.label
                               : std::string(complexity::to_string(d.complexity.op.kind)) + "/" +
                                     std::string(usecases::name_of(d.usecase));
    return w;
}

std::pair<MachineConfig, WorkloadProfile> resolve(const ConfigDocument& doc) {
    return std::visit(
        [&](const auto& src) -> std::pair<MachineConfig, WorkloadProfile> {
            using T = std::decay_t<decltype(src)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                throw ValidationError("workload", "a workload or a scenario is required");
            } else if constexpr (std::is_same_v<T, WorkloadProfile>) {
                return {doc.machine, src};
            } else if constexpr (std::is_same_v<T, DeclarativeWorkload>) {
                return {doc.machine, resolve_workload(src)};
            } else {
                const auto& s = scenarios::find_scenario(src.id);
                return {s.machine, s.workload};
            }
        },
        doc.workload);
}

sweep::AxisSpec parse_axis_arg(std::string_view text) {
    const std::string s(text);
    sweep::AxisSpec axis;
    const auto param_of = [](const std::string& id) {
        auto p = sweep::parse_axis_param(id);
        if (!p) throw ValidationError("axis", "unknown axis parameter '" + id + "'");
        return *p;
    };
    if (auto eq = s.find('='); eq != std::string::npos) {
        axis.param = param_of(s.substr(0, eq));
        std::stringstream ss(s.substr(eq + 1));
        std::string item;
        while (std::getline(ss, item, ','))
            axis.explicit_values.push_back(parse_quantity(item, dimension_of(axis.param), "axis"));
        if (axis.explicit_values.empty()) throw ValidationError("axis", "no values in '" + s + "'");
        return axis;
    }
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() < 3 || parts.size() > 5)
        throw ValidationError("axis", "expected id:min:max[:scale[:points]] or id=v1,v2,..., got '" + s + "'");
    axis.param = param_of(parts[0]);
    const Dimension dim = dimension_of(axis.param);
    axis.min = parse_quantity(parts[1], dim, "axis");
    axis.max = parse_quantity(parts[2], dim, "axis");
    if (parts.size() >= 4) {
        auto sc = parse_scale(parts[3]);
        if (!sc) throw ValidationError("axis", "scale must be log or linear, got '" + parts[3] + "'");
        axis.scale = *sc;
    }
    if (parts.size() == 5) {
        char* end = nullptr;
        const long n = std::strtol(parts[4].c_str(), &end, 10);
        if (parts[4].empty() || *end != '\0') throw ValidationError("axis", "points must be an integer");
        axis.points = static_cast<int>(n);
    }
    sweep::validate(axis);
    return axis;
}

}  // namespace bitlet::config
