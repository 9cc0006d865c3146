#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bitlet/engine.hpp"
#include "bitlet/scenarios.hpp"
#include "bitlet/sweep.hpp"

namespace bitlet::emit {

enum class Format { Text, Csv, Json };

[[nodiscard]] std::optional<Format> parse_format(std::string_view s);

/// One evaluated configuration column.
struct NamedResult {
    std::string name;
    MachineConfig machine;
    WorkloadProfile workload;
    engine::EvalResult result;

    bool operator==(const NamedResult&) const = default;
};

[[nodiscard]] NamedResult evaluate_named(std::string name, const MachineConfig& m, const WorkloadProfile& w);

/// Shortest decimal text that parses back to the same double; "inf" for +inf.
[[nodiscard]] std::string format_number(double v);

/// Column names of the CSV table, in order.
[[nodiscard]] const std::vector<std::string>& csv_columns();

/// Text: parameters then outputs as rows, one column per configuration.
/// CSV: one row per configuration. JSON: {"results": [...]}.
[[nodiscard]] std::string emit_table(const std::vector<NamedResult>& results, Format format);

/// Inverse of emit_table(..., Json). Throws ValidationError on malformed input.
[[nodiscard]] std::vector<NamedResult> parse_results_json(std::string_view text);

[[nodiscard]] std::string emit_sweep(const sweep::SweepGrid& grid, Format format);
[[nodiscard]] std::string emit_iso_lines(const std::vector<sweep::IsoLine>& lines, Format format);
[[nodiscard]] std::string emit_crossover(const sweep::CrossoverCurve& curve, Format format);
[[nodiscard]] std::string emit_report(const scenarios::ScenarioReport& report, Format format);
[[nodiscard]] std::string emit_catalog(const std::vector<scenarios::Scenario>& catalog, Format format);
[[nodiscard]] std::string emit_errors(const std::vector<FieldError>& errors);

}  // namespace bitlet::emit
