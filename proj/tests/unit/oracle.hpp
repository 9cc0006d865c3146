#pragma once

// Independent reference formulas for the tests. Nothing here calls into the
// library; each function restates the model from first principles.

#include <cmath>
#include <cstdint>
#include <random>
#include <string>

namespace oracle {

/// Throughput and power of N computations executed as whole PIM batches
/// followed by the bus transfer of N*dio bits (no overlap).
struct Run {
    double seconds = 0;
    double joules = 0;
    double throughput() const { return count / seconds; }
    double power() const { return joules / seconds; }
    double count = 0;
};

inline Run time_accounting(double xbs, double rows, double ct, double bw, double ebit_pim, double ebit_cpu, double cc,
                           double dio, double batches) {
    const double per_batch = xbs * rows;
    Run r;
    r.count = batches * per_batch;
    const double pim_seconds = batches * cc * ct;
    const double bus_seconds = r.count * dio / bw;
    r.seconds = pim_seconds + bus_seconds;
    // Every cycle touches every row of every crossbar; every bit on the bus costs ebit_cpu.
    r.joules = batches * cc * per_batch * ebit_pim + r.count * dio * ebit_cpu;
    return r;
}

// Cycle counts per operation for a W-bit element.
inline double op_cycles(const std::string& op, double w) {
    if (op == "OR") return 2 * w;
    if (op == "AND") return 3 * w;
    if (op == "NOT") return w;
    if (op == "ADD") return 9 * w;
    if (op == "ADD4") return 7 * w;
    if (op == "MULT_FULL_EXACT") return 13 * w * w - 14 * w;
    if (op == "MULT_FULL_APPROX") return 12.5 * w * w;
    if (op == "MULT_LOW_APPROX") return 6.25 * w * w;
    return NAN;
}

inline int phases(double rows) {
    int ph = 0;
    double span = 1;
    while (span < rows) {
        span *= 2;
        ++ph;
    }
    return ph;
}

// Placement-and-alignment cycles: exact and approximation columns.
inline double pac(const std::string& layout, double w, double r, bool exact) {
    if (layout == "parallel_aligned") return 0;
    if (layout == "gathered_placement_alignment" || layout == "gathered_unaligned") return exact ? w + r : r;
    if (layout == "scattered_placement_alignment" || layout == "scattered_unaligned")
        return exact ? (w + 1) * r : w * r;
    if (layout == "reduction_per_xb") return exact ? phases(r) * w + r - 1 : r;
    return NAN;
}

// Table-style transfer totals for n records.
inline double transfer_bits(const std::string& kind, double n, double s, double s1, double p, double r) {
    if (kind == "cpu_pure") return n * s;
    if (kind == "cpu_pure_two_pass") return n * s1 + p * n * s;
    if (kind == "pim_pure") return 0;
    if (kind == "compact") return n * s1;
    if (kind == "filter1") return p * n * s + n;
    if (kind == "filter2") return p * n * (s + std::log2(n));
    if (kind == "hybrid") return p * n * s1 + n;
    if (kind == "reduction0") return s1;
    if (kind == "reduction1") return std::ceil(n / r) * s1;
    return NAN;
}

/// Round half away from zero at `decimals` places.
inline double round_to(double v, int decimals) {
    const double scale = std::pow(10.0, decimals);
    return std::round(v * scale) / scale;
}

inline bool rel_close(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

/// Deterministic generator for property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    double pow2(int lo, int hi) { return std::ldexp(1.0, integer(lo, hi)); }
    bool coin() { return integer(0, 1) == 1; }

private:
    std::mt19937_64 rng_;
};

inline constexpr int kCases = 1000;

}  // namespace oracle
