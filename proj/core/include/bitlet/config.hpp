#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "bitlet/complexity.hpp"
#include "bitlet/metrics.hpp"
#include "bitlet/quantities.hpp"
#include "bitlet/sweep.hpp"
#include "bitlet/usecases.hpp"

namespace bitlet::config {

/// Physical dimension of a config value; decides which unit suffixes parse.
enum class Dimension { Count, Bits, Time, Energy, Bandwidth, Power };

/// Parses "10ns", "0.1 pJ", "1000Gbps", "1.1e-9" ... into SI units. A bare
/// number is taken as SI. Throws ValidationError on an unknown suffix or a
/// suffix of another dimension.
[[nodiscard]] double parse_quantity(std::string_view text, Dimension dim, const std::string& field = "value");

/// Workload built from a complexity spec and a use case.
struct DeclarativeWorkload {
    complexity::ComplexitySpec complexity;
    usecases::UseCase usecase = usecases::CpuPure{};
    double n = 1;
    std::string label;

    bool operator==(const DeclarativeWorkload&) const = default;
};

struct ScenarioRef {
    std::string id;
    bool operator==(const ScenarioRef&) const = default;
};

using WorkloadSource = std::variant<std::monostate, WorkloadProfile, DeclarativeWorkload, ScenarioRef>;

struct SweepSection {
    std::vector<sweep::AxisSpec> axes;
    std::vector<Metric> metrics;
    bool operator==(const SweepSection&) const = default;
};

struct ContourSection {
    Metric metric = Metric::TpCombinedGops;
    std::vector<double> levels;  // GOPS or W
    sweep::PlaneWindow window;
    bool operator==(const ContourSection&) const = default;
};

struct CrossoverSection {
    sweep::AxisSpec bw{sweep::AxisParam::Bw, 100e9, 100e12, 16, sweep::Scale::Log, {}};
    bool operator==(const CrossoverSection&) const = default;
};

struct ConfigDocument {
    MachineConfig machine;
    WorkloadSource workload;
    std::optional<SweepSection> sweep;
    std::optional<ContourSection> contour;
    std::optional<CrossoverSection> crossover;

    bool operator==(const ConfigDocument&) const = default;
};

/// Syntax error in the JSON text; line and column are 1-based.
class SyntaxError : public ValidationError {
public:
    SyntaxError(std::size_t line, std::size_t column, const std::string& detail);
    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Strict parse: unknown keys, unit mismatches and constraint violations all
/// throw ValidationError with every offending field path.
[[nodiscard]] ConfigDocument parse_config(std::string_view text);
[[nodiscard]] ConfigDocument load_config_file(const std::string& path);

/// Canonical JSON with SI numbers; parse_config(render_config(d)) == d.
[[nodiscard]] std::string render_config(const ConfigDocument& doc);

/// Machine and workload the document evaluates. A scenario reference yields
/// the scenario's own machine. Throws ValidationError if there is no workload.
[[nodiscard]] std::pair<MachineConfig, WorkloadProfile> resolve(const ConfigDocument& doc);
[[nodiscard]] WorkloadProfile resolve_workload(const DeclarativeWorkload& d);

/// Axis from its CLI form: "xbs:512:16384:log:4" or "xbs=512,1024,4096".
[[nodiscard]] sweep::AxisSpec parse_axis_arg(std::string_view text);

[[nodiscard]] Dimension dimension_of(sweep::AxisParam p);

}  // namespace bitlet::config
