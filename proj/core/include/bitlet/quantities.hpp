#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bitlet {

/// One offending field in a rejected input.
struct FieldError {
    std::string field;
    std::string message;

    bool operator==(const FieldError&) const = default;
};

/// Thrown for any input that violates a documented constraint. Carries every
/// field-level problem found, not only the first one.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(std::vector<FieldError> errors);
    ValidationError(std::string field, std::string message);

    [[nodiscard]] const std::vector<FieldError>& errors() const noexcept { return errors_; }

private:
    std::vector<FieldError> errors_;
};

// Unit scales. Conversions are exact powers of ten.
inline constexpr double kGiga = 1e9;
inline constexpr double kNano = 1e-9;
inline constexpr double kPico = 1e-12;
inline constexpr double kFemto = 1e-15;

[[nodiscard]] constexpr double to_gops(double ops) noexcept { return ops / kGiga; }
[[nodiscard]] constexpr double from_gops(double gops) noexcept { return gops * kGiga; }
[[nodiscard]] constexpr double to_gbps(double bps) noexcept { return bps / kGiga; }
[[nodiscard]] constexpr double from_gbps(double gbps) noexcept { return gbps * kGiga; }
/// J/OP -> J/GOP
[[nodiscard]] constexpr double to_j_per_gop(double j_per_op) noexcept { return j_per_op * kGiga; }
[[nodiscard]] constexpr double from_j_per_gop(double j_per_gop) noexcept { return j_per_gop / kGiga; }

/// Technological and architectural parameters of a PIM+CPU machine.
/// Defaults are the typical values: 1024 crossbars of 1024x1024 cells,
/// 10 ns PIM cycle, 0.1 pJ per PIM bit, 1000 Gbps memory bus, 15 pJ per
/// transferred bit.
struct MachineConfig {
    double xbs = 1024;            // crossbar count
    double rows = 1024;           // rows per crossbar (R)
    double cols = 1024;           // columns per crossbar (C), capacity check only
    double cycle_time = 10e-9;    // seconds
    double ebit_pim = 0.1e-12;    // joules per bit per PIM cycle
    double bw = 1000e9;           // bits per second
    double ebit_cpu = 15e-12;     // joules per transferred bit
    std::optional<double> tdp_pim;  // watts
    std::optional<double> tdp_cpu;  // watts

    bool operator==(const MachineConfig&) const = default;
};

/// Algorithmic parameters of one computation. CC is always oc + pac.
struct WorkloadProfile {
    double oc = 0;            // operation complexity, PIM cycles
    double pac = 0;           // placement-and-alignment complexity, PIM cycles
    double dio_cpu = 0;       // bits per computation, CPU-pure mode
    double dio_combined = 0;  // bits per computation, combined mode
    std::string label;

    [[nodiscard]] double cc() const noexcept { return oc + pac; }

    bool operator==(const WorkloadProfile&) const = default;
};

/// Returns cfg unchanged or throws ValidationError naming every bad field.
const MachineConfig& validate_machine(const MachineConfig& cfg);

/// Field-level sign/finiteness checks on a workload. Evaluability (cc >= 1,
/// nonzero transfer) is the engine's concern.
const WorkloadProfile& validate_workload(const WorkloadProfile& w);

/// Human-readable notes for parameters outside the typical ranges. Such
/// values are legal (limit studies); callers decide whether to show them.
std::vector<std::string> range_warnings(const MachineConfig& cfg);
std::vector<std::string> range_warnings(const WorkloadProfile& w);

/// Optional capacity check: a workload needing `cells_per_row` cells in one
/// row must fit in C columns.
void check_row_capacity(const MachineConfig& cfg, double cells_per_row);

}  // namespace bitlet
