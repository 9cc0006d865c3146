#pragma once

#include <string_view>
#include <variant>

namespace bitlet::usecases {

// Record sizes (s, s1) are bits, p is selectivity in [0,1], r is rows per
// crossbar. Every variant carries its CPU-pure baseline size s.

struct CpuPure {
    double s = 0;
    bool operator==(const CpuPure&) const = default;
};
// select on s1, then fetch
struct CpuPureTwoPass {
    double s = 0;
    double s1 = 0;
    double p = 0;
    bool operator==(const CpuPureTwoPass&) const = default;
};
struct PimPure {
    double s = 0;
    bool operator==(const PimPure&) const = default;
};
struct Compact {
    double s = 0;
    double s1 = 0;
    bool operator==(const Compact&) const = default;
};
// bit-vector of selections
struct Filter1 {
    double s = 0;
    double p = 0;
    bool operator==(const Filter1&) const = default;
};
// index list
struct Filter2 {
    double s = 0;
    double p = 0;
    bool ceil_index_bits = false;
    bool operator==(const Filter2&) const = default;
};
struct Hybrid {
    double s = 0;
    double s1 = 0;
    double p = 0;
    bool operator==(const Hybrid&) const = default;
};
struct Reduction0 {
    double s = 0;
    double s1 = 0;
    bool operator==(const Reduction0&) const = default;
};
// one result per crossbar
struct Reduction1 {
    double s = 0;
    double s1 = 0;
    double r = 1024;
    bool operator==(const Reduction1&) const = default;
};

using UseCase = std::variant<CpuPure, CpuPureTwoPass, PimPure, Compact, Filter1, Filter2, Hybrid,
                             Reduction0, Reduction1>;

/// Throws ValidationError on bad selectivity, sizes, or n < 1.
void validate(const UseCase& uc, double n);

[[nodiscard]] double baseline_bits(const UseCase& uc, double n);
[[nodiscard]] double total_transfer_bits(const UseCase& uc, double n);
[[nodiscard]] double dio_per_computation(const UseCase& uc, double n);
/// baseline_bits - total_transfer_bits.
[[nodiscard]] double transfer_reduction_bits(const UseCase& uc, double n);

/// The Hybrid reduction term exactly as tabulated, N*(S-1) - N1*S1. Kept for
/// reference; it does not satisfy conservation.
[[nodiscard]] double hybrid_reduction_as_printed(const Hybrid& h, double n);

/// Per-computation bits in CPU-pure mode for the same records (s).
[[nodiscard]] double cpu_pure_dio(const UseCase& uc);

[[nodiscard]] std::string_view name_of(const UseCase& uc);

}  // namespace bitlet::usecases
