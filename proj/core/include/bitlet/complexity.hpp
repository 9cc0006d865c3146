#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace bitlet::complexity {

// MAGIC-NOR cycle costs per operation; W is the element width in bits.
//   OR 2W, AND 3W, NOT W, ADD 9W, ADD4 (4-input NOR) 7W,
//   full multiply 13W^2-14W (approx. 12.5W^2), low multiply ~6.25W^2.
enum class OpKind {
    Or,
    And,
    Not,
    Add,
    Add4,
    MultFullExact,
    MultFullApprox,
    MultLowApprox,
    Custom,
};

/// An operation plus its fixed cycle count when kind == Custom.
struct Op {
    OpKind kind = OpKind::Add;
    double custom_cycles = 0;

    static Op custom(double cycles) { return {OpKind::Custom, cycles}; }
    bool operator==(const Op&) const = default;
};

enum class LayoutClass {
    ParallelAligned,
    GatheredPlacementAlignment,
    GatheredUnaligned,
    ScatteredPlacementAlignment,
    ScatteredUnaligned,
    ReductionPerXB,
};

struct ComplexitySpec {
    Op op;
    double width = 16;
    LayoutClass layout = LayoutClass::ParallelAligned;
    std::optional<double> rows;  // required for every layout except ParallelAligned
    bool exact = true;           // exact "Total" vs "Approximation" column

    bool operator==(const ComplexitySpec&) const = default;
};

struct Cycles {
    double oc = 0;
    double pac = 0;
    [[nodiscard]] double total() const noexcept { return oc + pac; }
};

[[nodiscard]] double oc_cycles(Op op, double width);
[[nodiscard]] double pac_cycles(LayoutClass layout, double width, std::optional<double> rows, bool exact);

/// Number of tree-reduction phases, ceil(log2(rows)).
[[nodiscard]] double reduction_phases(double rows);

/// Full single-crossbar tree reduction: ph*(oc_add + width) + (rows - 1).
[[nodiscard]] double reduction_cc(double oc_add, double width, double rows);

[[nodiscard]] Cycles compile(const ComplexitySpec& spec);

/// Fixed-point dot product: low-precision-approx multiply of w_in-bit inputs
/// followed by a reduction of w_acc-bit partial sums.
[[nodiscard]] double fipdp_cc(double w_in, double w_acc, double rows);

struct ConvolutionCycles {
    double cycles = 0;
    bool approximate = false;  // true when produced by the rough builder
};

/// Tabulated constants for p in {3,5}, 8-bit pixels, rows in {512,1024};
/// anything else goes through the approximate builder.
[[nodiscard]] ConvolutionCycles convolution_cc(int p, double width, double rows);
[[nodiscard]] double convolution_cc_approx(int p, double width, double rows);

struct FloatCycles {
    double t_mul = 0;
    double t_add = 0;
};

/// Floating-point multiply/add cycles for nm mantissa and ne exponent bits.
/// Search cycles in the add are counted at NOR-cycle weight.
[[nodiscard]] FloatCycles floatpim_cc(double nm, double ne);

// Published constants that disagree with the formulas above.
inline constexpr double kFloatPimPublishedTMul = 360;     // bfloat16, formula gives 465
inline constexpr double kFloatPimPublishedAvgCC = 344;    // mean of 360 and 328
inline constexpr double kFloatPimTableCC = 336.5;         // value used in the FloatPIM table
inline constexpr double kHadamardPublishedCC = 710;       // 8-bit, MULT_FULL_EXACT(8) is 720

[[nodiscard]] std::string_view to_string(OpKind k);
[[nodiscard]] std::string_view to_string(LayoutClass l);
[[nodiscard]] std::optional<OpKind> parse_op_kind(std::string_view s);
[[nodiscard]] std::optional<LayoutClass> parse_layout(std::string_view s);

}  // namespace bitlet::complexity
