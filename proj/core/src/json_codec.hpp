#pragma once

// nlohmann-based encoders shared by the emitters and the HTTP service.

#include <vector>

#include "bitlet/emit.hpp"
#include "json.hpp"

namespace bitlet::emit::detail {

using ojson = nlohmann::ordered_json;

/// Non-finite values become null.
ojson number(double v);

ojson machine_to_json(const MachineConfig& m);
ojson workload_to_json(const WorkloadProfile& w);
ojson result_to_json(const engine::EvalResult& r);
ojson outputs_to_json(const NamedResult& r);
ojson named_to_json(const NamedResult& r);
ojson sweep_to_json(const sweep::SweepGrid& grid);
ojson iso_lines_to_json(const std::vector<sweep::IsoLine>& lines);
ojson crossover_to_json(const sweep::CrossoverCurve& curve);
ojson report_to_json(const scenarios::ScenarioReport& report);
ojson catalog_to_json(const std::vector<scenarios::Scenario>& catalog);
ojson errors_to_json(const std::vector<FieldError>& errors);

}  // namespace bitlet::emit::detail
