#include "bitlet/quantities.hpp"

#include <cmath>
#include <sstream>

namespace bitlet {

namespace {

std::string join(const std::vector<FieldError>& errors) {
    std::ostringstream os;
    for (std::size_t i = 0; i < errors.size(); ++i) {
        if (i) os << "; ";
        os << errors[i].field << ": " << errors[i].message;
    }
    return os.str();
}

void require_positive(std::vector<FieldError>& out, const char* field, double v) {
    if (!std::isfinite(v))
        out.push_back({field, std::string(field) + " must be finite"});
    else if (!(v > 0))
        out.push_back({field, std::string(field) + " must be > 0"});
}

void require_at_least(std::vector<FieldError>& out, const char* field, double v, double lo) {
    if (!std::isfinite(v)) {
        out.push_back({field, std::string(field) + " must be finite"});
    } else if (v < lo) {
        std::ostringstream os;
        os << field << " must be >= " << lo;
        out.push_back({field, os.str()});
    }
}

void warn_outside(std::vector<std::string>& out, const char* what, double v, double lo, double hi) {
    if (v < lo || v > hi) {
        std::ostringstream os;
        os << what << " = " << v << " is outside the typical range [" << lo << ", " << hi << "]";
        out.push_back(os.str());
    }
}

}  // namespace

ValidationError::ValidationError(std::vector<FieldError> errors)
    : std::invalid_argument(join(errors)), errors_(std::move(errors)) {}

ValidationError::ValidationError(std::string field, std::string message)
    : ValidationError(std::vector<FieldError>{{std::move(field), std::move(message)}}) {}

const MachineConfig& validate_machine(const MachineConfig& cfg) {
    std::vector<FieldError> errors;
    require_at_least(errors, "xbs", cfg.xbs, 1);
    require_at_least(errors, "rows", cfg.rows, 1);
    require_at_least(errors, "cols", cfg.cols, 1);
    require_positive(errors, "cycle_time", cfg.cycle_time);
    require_at_least(errors, "ebit_pim", cfg.ebit_pim, 0);
    require_positive(errors, "bw", cfg.bw);
    require_at_least(errors, "ebit_cpu", cfg.ebit_cpu, 0);
    if (cfg.tdp_pim) require_positive(errors, "tdp_pim", *cfg.tdp_pim);
    if (cfg.tdp_cpu) require_positive(errors, "tdp_cpu", *cfg.tdp_cpu);
    if (!errors.empty()) throw ValidationError(std::move(errors));
    return cfg;
}

const WorkloadProfile& validate_workload(const WorkloadProfile& w) {
    std::vector<FieldError> errors;
    require_at_least(errors, "oc", w.oc, 0);
    require_at_least(errors, "pac", w.pac, 0);
    require_at_least(errors, "dio_cpu", w.dio_cpu, 0);
    require_at_least(errors, "dio_combined", w.dio_combined, 0);
    if (!errors.empty()) throw ValidationError(std::move(errors));
    return w;
}

std::vector<std::string> range_warnings(const MachineConfig& cfg) {
    std::vector<std::string> out;
    warn_outside(out, "xbs", cfg.xbs, 1, 65536);
    warn_outside(out, "rows", cfg.rows, 16, 1024);
    warn_outside(out, "cols", cfg.cols, 16, 1024);
    warn_outside(out, "bw", cfg.bw, 0.1e12, 16e12);
    return out;
}

std::vector<std::string> range_warnings(const WorkloadProfile& w) {
    std::vector<std::string> out;
    warn_outside(out, "cc", w.cc(), 1, 65536);
    warn_outside(out, "dio_cpu", w.dio_cpu, 1, 256);
    return out;
}

void check_row_capacity(const MachineConfig& cfg, double cells_per_row) {
    if (cells_per_row > cfg.cols) {
        std::ostringstream os;
        os << "workload needs " << cells_per_row << " cells per row but cols = " << cfg.cols;
        throw ValidationError("cols", os.str());
    }
}

}  // namespace bitlet
