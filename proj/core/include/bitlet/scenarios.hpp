#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bitlet/engine.hpp"
#include "bitlet/metrics.hpp"

namespace bitlet::scenarios {

/// A published value. `decimals` is the displayed precision (negative rounds
/// to tens, hundreds, ...). When rel_tol is set the value is compared with a
/// relative tolerance instead of by rounding.
struct Expectation {
    Metric metric = Metric::TpCombinedGops;
    double value = 0;
    int decimals = 1;
    std::optional<double> rel_tol;
    std::string citation;
};

struct Scenario {
    std::string id;
    std::string description;
    MachineConfig machine;
    WorkloadProfile workload;
    std::vector<Expectation> expected;
};

struct CompareMode {
    bool displayed_rounding = true;  // round to displayed precision, then exact match
    double rel_tol = 1e-3;       // used when displayed_rounding is false
};

struct ExpectationCheck {
    Expectation expectation;
    double computed = 0;
    bool pass = false;
};

struct ScenarioReport {
    std::string id;
    std::string description;
    MachineConfig machine;
    WorkloadProfile workload;
    engine::EvalResult result;
    std::vector<ExpectationCheck> checks;

    [[nodiscard]] bool passed() const;
};

class UnknownScenario : public std::out_of_range {
public:
    explicit UnknownScenario(const std::string& id) : std::out_of_range("unknown scenario: " + id), id_(id) {}
    [[nodiscard]] const std::string& id() const noexcept { return id_; }

private:
    std::string id_;
};

/// Every built-in scenario, in a stable order.
[[nodiscard]] const std::vector<Scenario>& list_scenarios();
[[nodiscard]] const Scenario& find_scenario(const std::string& id);

/// Evaluates the scenario and checks every expectation. `overrides` replace
/// expectations for the same metric or add new ones.
[[nodiscard]] ScenarioReport run_scenario(const std::string& id, const CompareMode& mode = {},
                                          const std::vector<Expectation>& overrides = {});
[[nodiscard]] ScenarioReport run_scenario(const Scenario& s, const CompareMode& mode = {},
                                          const std::vector<Expectation>& overrides = {});

/// "displayed" or "rel:<tolerance>" (e.g. rel:1e-3).
[[nodiscard]] std::optional<CompareMode> parse_compare_mode(std::string_view text);
/// "metric=value" or "metric=value:decimals"; decimals default to 1.
[[nodiscard]] Expectation parse_expectation(std::string_view text);

/// Round-half-away-from-zero at `decimals` and compare.
[[nodiscard]] bool matches_at_precision(double computed, double expected, int decimals);
[[nodiscard]] bool check(const Expectation& e, double computed, const CompareMode& mode);

}  // namespace bitlet::scenarios
