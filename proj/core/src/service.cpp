#include "bitlet/service.hpp"

#include <array>
#include <thread>

#include "bitlet/config.hpp"
#include "bitlet/scenarios.hpp"
#include "bitlet/sweep.hpp"
#include "httplib.h"
#include "json_codec.hpp"

namespace bitlet::service {

namespace {

using emit::detail::ojson;

constexpr std::array<std::string_view, 9> kMachineFields{"xbs",      "rows", "cols",    "cycle_time", "ebit_pim",
                                                          "bw",       "ebit_cpu", "tdp_pim", "tdp_cpu"};

Response json_response(int status, const ojson& j) { return {status, j.dump(2) + "\n", "application/json"}; }

Response error_response(int status, const std::vector<FieldError>& errors) {
    return json_response(status, emit::detail::errors_to_json(errors));
}

Response error_response(int status, const std::string& field, const std::string& message) {
    return error_response(status, std::vector<FieldError>{{field, message}});
}

// Engine errors name bare fields; give them the document path.
std::vector<FieldError> with_paths(const ValidationError& e) {
    std::vector<FieldError> out;
    for (const auto& fe : e.errors()) {
        if (fe.field.find('.') != std::string::npos || fe.field == "document") {
            out.push_back(fe);
            continue;
        }
        const bool machine_field =
            std::find(kMachineFields.begin(), kMachineFields.end(), fe.field) != kMachineFields.end();
        out.push_back({(machine_field ? "machine." : "workload.") + fe.field, fe.message});
    }
    return out;
}

ojson resolved_inputs(const MachineConfig& m, const WorkloadProfile& w) {
    ojson j = ojson::object();
    j["machine"] = emit::detail::machine_to_json(m);
    j["workload"] = emit::detail::workload_to_json(w);
    return j;
}

Response evaluate(const config::ConfigDocument& doc) {
    const auto [m, w] = config::resolve(doc);
    const auto named = emit::evaluate_named(w.label.empty() ? "evaluate" : w.label, m, w);
    ojson j = resolved_inputs(m, w);
    j["outputs"] = emit::detail::outputs_to_json(named);
    j["result"] = emit::detail::result_to_json(named.result);
    ojson warnings = ojson::array();
    for (const auto& s : range_warnings(m)) warnings.push_back(s);
    for (const auto& s : range_warnings(w)) warnings.push_back(s);
    j["warnings"] = warnings;
    return json_response(200, j);
}

Response run_sweep(const config::ConfigDocument& doc) {
    if (!doc.sweep) return error_response(400, "sweep", "a sweep section is required");
    const auto [m, w] = config::resolve(doc);
    const auto grid = sweep::grid_sweep(m, w, doc.sweep->axes, doc.sweep->metrics);
    ojson j = resolved_inputs(m, w);
    j["sweep"] = emit::detail::sweep_to_json(grid);
    return json_response(200, j);
}

Response run_contour(const config::ConfigDocument& doc) {
    if (!doc.contour) return error_response(400, "contour", "a contour section is required");
    if (doc.contour->levels.empty()) return error_response(400, "contour.levels", "at least one level is required");
    const MachineConfig m =
        std::holds_alternative<std::monostate>(doc.workload) ? doc.machine : config::resolve(doc).first;
    std::vector<sweep::IsoLine> lines;
    std::vector<FieldError> errors;
    for (std::size_t i = 0; i < doc.contour->levels.size(); ++i) {
        try {
            lines.push_back(sweep::iso_line_cc_dio(m, doc.contour->metric, doc.contour->levels[i], doc.contour->window));
        } catch (const ValidationError& e) {
            for (const auto& fe : e.errors())
                errors.push_back({"contour.levels[" + std::to_string(i) + "]", fe.message});
        }
    }
    if (!errors.empty()) return error_response(400, errors);
    ojson j = ojson::object();
    j["machine"] = emit::detail::machine_to_json(m);
    const auto& win = doc.contour->window;
    j["window"] = {{"cc_min", win.cc_min},
                   {"cc_max", win.cc_max},
                   {"dio_min", win.dio_min},
                   {"dio_max", win.dio_max},
                   {"points", win.points}};
    j["lines"] = emit::detail::iso_lines_to_json(lines)["lines"];
    return json_response(200, j);
}

Response run_crossover(const config::ConfigDocument& doc) {
    const auto [m, w] = config::resolve(doc);
    const auto section = doc.crossover.value_or(config::CrossoverSection{});
    const auto curve = sweep::crossover_xbs_bw(m, w.cc(), w.dio_cpu, w.dio_combined, sweep::axis_values(section.bw));
    ojson j = resolved_inputs(m, w);
    j["crossover"] = emit::detail::crossover_to_json(curve);
    return json_response(200, j);
}

Response run_scenario(const std::string& id, const Request& req) {
    scenarios::CompareMode mode;
    if (auto it = req.query.find("tolerance_mode"); it != req.query.end()) {
        auto parsed = scenarios::parse_compare_mode(it->second);
        if (!parsed) return error_response(400, "tolerance_mode", "expected displayed or rel:<tolerance>");
        mode = *parsed;
    }
    try {
        return json_response(200, emit::detail::report_to_json(scenarios::run_scenario(id, mode)));
    } catch (const scenarios::UnknownScenario& e) {
        return error_response(404, "id", e.what());
    }
}

Response dispatch(const Request& req) {
    const std::string& p = req.path;
    const bool get = req.method == "GET";
    const bool post = req.method == "POST";

    if (p == "/health") return get ? json_response(200, {{"status", "ok"}}) : error_response(405, "method", "use GET");
    if (p == "/scenarios") {
        if (!get) return error_response(405, "method", "use GET");
        return json_response(200, emit::detail::catalog_to_json(scenarios::list_scenarios()));
    }
    const std::string prefix = "/scenarios/";
    const std::string suffix = "/run";
    if (p.size() > prefix.size() + suffix.size() && p.compare(0, prefix.size(), prefix) == 0 &&
        p.compare(p.size() - suffix.size(), suffix.size(), suffix) == 0) {
        if (!get) return error_response(405, "method", "use GET");
        return run_scenario(p.substr(prefix.size(), p.size() - prefix.size() - suffix.size()), req);
    }

    using Handler = Response (*)(const config::ConfigDocument&);
    static const std::array<std::pair<std::string_view, Handler>, 4> kPost{{
        {"/evaluate", &evaluate},
        {"/sweep", &run_sweep},
        {"/contour", &run_contour},
        {"/crossover", &run_crossover},
    }};
    for (const auto& [route, fn] : kPost) {
        if (p != route) continue;
        if (!post) return error_response(405, "method", "use POST");
        const auto doc = config::parse_config(req.body.empty() ? std::string_view("{}") : req.body);
        return fn(doc);
    }
    return error_response(404, "path", "no route for " + req.method + " " + p);
}

}  // namespace

Response handle(const Request& request) {
    try {
        return dispatch(request);
    } catch (const ValidationError& e) {
        return error_response(400, with_paths(e));
    } catch (const scenarios::UnknownScenario& e) {
        return error_response(404, "scenario", e.what());
    } catch (const std::exception& e) {
        return error_response(500, "internal", e.what());
    }
}

Response handle(const std::string& method, const std::string& target, const std::string& body) {
    Request req;
    req.method = method;
    req.body = body;
    const auto q = target.find('?');
    req.path = target.substr(0, q);
    if (q != std::string::npos) {
        httplib::Params params;
        httplib::detail::parse_query_text(target.substr(q + 1), params);
        for (const auto& [k, v] : params) req.query[k] = v;
    }
    return handle(req);
}

struct Server::Impl {
    httplib::Server http;
    std::thread worker;
};

Server::Server() : impl_(std::make_unique<Impl>()) {
    auto forward = [](const httplib::Request& hreq, httplib::Response& hres) {
        Request req;
        req.method = hreq.method;
        req.path = hreq.path;
        req.body = hreq.body;
        for (const auto& [k, v] : hreq.params) req.query[k] = v;
        const auto res = handle(req);
        hres.status = res.status;
        hres.set_content(res.body, res.content_type);
    };
    impl_->http.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                     {"Access-Control-Allow-Headers", "Content-Type"},
                                     {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
    impl_->http.Get(".*", forward);
    impl_->http.Post(".*", forward);
    impl_->http.Options(".*", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
}

Server::~Server() { stop(); }

int Server::bind(const std::string& host, int port) {
    if (port == 0) return impl_->http.bind_to_any_port(host);
    return impl_->http.bind_to_port(host, port) ? port : -1;
}

bool Server::listen() { return impl_->http.listen_after_bind(); }

void Server::start() {
    impl_->worker = std::thread([this] { impl_->http.listen_after_bind(); });
    impl_->http.wait_until_ready();
}

void Server::stop() {
    if (impl_->http.is_running()) impl_->http.stop();
    if (impl_->worker.joinable()) impl_->worker.join();
}

}  // namespace bitlet::service
