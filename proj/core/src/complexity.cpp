#include "bitlet/complexity.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <utility>

#include "bitlet/quantities.hpp"

namespace bitlet::complexity {

namespace {

void require_width(double width, double min_width = 1) {
    if (!std::isfinite(width) || width < min_width) {
        std::ostringstream os;
        os << "width must be >= " << min_width;
        throw ValidationError("width", os.str());
    }
}

double require_rows(std::optional<double> rows) {
    if (!rows || !std::isfinite(*rows) || *rows < 2)
        throw ValidationError("rows", "rows must be >= 2 for this layout");
    return *rows;
}

constexpr std::array<std::pair<OpKind, std::string_view>, 9> kOpNames{{
    {OpKind::Or, "OR"},
    {OpKind::And, "AND"},
    {OpKind::Not, "NOT"},
    {OpKind::Add, "ADD"},
    {OpKind::Add4, "ADD4"},
    {OpKind::MultFullExact, "MULT_FULL_EXACT"},
    {OpKind::MultFullApprox, "MULT_FULL_APPROX"},
    {OpKind::MultLowApprox, "MULT_LOW_APPROX"},
    {OpKind::Custom, "CUSTOM"},
}};

constexpr std::array<std::pair<LayoutClass, std::string_view>, 6> kLayoutNames{{
    {LayoutClass::ParallelAligned, "parallel_aligned"},
    {LayoutClass::GatheredPlacementAlignment, "gathered_placement_alignment"},
    {LayoutClass::GatheredUnaligned, "gathered_unaligned"},
    {LayoutClass::ScatteredPlacementAlignment, "scattered_placement_alignment"},
    {LayoutClass::ScatteredUnaligned, "scattered_unaligned"},
    {LayoutClass::ReductionPerXB, "reduction_per_xb"},
}};

}  // namespace

double oc_cycles(Op op, double width) {
    if (op.kind == OpKind::Custom) {
        if (!std::isfinite(op.custom_cycles) || op.custom_cycles < 0)
            throw ValidationError("cycles", "custom cycles must be >= 0");
        return op.custom_cycles;
    }
    const double w = width;
    switch (op.kind) {
        case OpKind::Or: require_width(w); return 2 * w;
        case OpKind::And: require_width(w); return 3 * w;
        case OpKind::Not: require_width(w); return w;
        case OpKind::Add: require_width(w); return 9 * w;
        case OpKind::Add4: require_width(w); return 7 * w;
        // 13W^2 - 14W is negative at W = 1.
        case OpKind::MultFullExact: require_width(w, 2); return 13 * w * w - 14 * w;
        case OpKind::MultFullApprox: require_width(w); return 12.5 * w * w;
        case OpKind::MultLowApprox: require_width(w); return 6.25 * w * w;
        case OpKind::Custom: break;
    }
    throw ValidationError("op", "unknown operation kind");
}

double pac_cycles(LayoutClass layout, double width, std::optional<double> rows, bool exact) {
    if (layout == LayoutClass::ParallelAligned) return 0;
    require_width(width);
    const double r = require_rows(rows);
    const double w = width;
    switch (layout) {
        case LayoutClass::GatheredPlacementAlignment:
        case LayoutClass::GatheredUnaligned:
            return exact ? w + r : r;
        case LayoutClass::ScatteredPlacementAlignment:
        case LayoutClass::ScatteredUnaligned:
            return exact ? (w + 1) * r : w * r;
        case LayoutClass::ReductionPerXB:
            return exact ? reduction_phases(r) * w + (r - 1) : r;
        case LayoutClass::ParallelAligned: break;
    }
    return 0;
}

double reduction_phases(double rows) {
    if (!std::isfinite(rows) || rows < 2) throw ValidationError("rows", "rows must be >= 2 for this layout");
    // Integer ceil(log2) avoids floating log2 landing just above an exact power.
    double ph = 0;
    for (double k = 1; k < rows; k *= 2) ++ph;
    return ph;
}

double reduction_cc(double oc_add, double width, double rows) {
    if (!(oc_add >= 0)) throw ValidationError("oc", "oc must be >= 0");
    if (!(width >= 0)) throw ValidationError("width", "width must be >= 0");
    const double ph = reduction_phases(rows);
    return ph * (oc_add + width) + (rows - 1);
}

Cycles compile(const ComplexitySpec& spec) {
    const double oc = oc_cycles(spec.op, spec.width);
    if (spec.layout == LayoutClass::ReductionPerXB) {
        const double r = require_rows(spec.rows);
        return {reduction_phases(r) * oc, pac_cycles(spec.layout, spec.width, r, spec.exact)};
    }
    return {oc, pac_cycles(spec.layout, spec.width, spec.rows, spec.exact)};
}

double fipdp_cc(double w_in, double w_acc, double rows) {
    require_width(w_in);
    if (!(w_acc >= w_in)) throw ValidationError("w_acc", "w_acc must be >= w_in");
    const double multiply = oc_cycles({OpKind::MultFullApprox}, w_in);
    const double add = oc_cycles({OpKind::Add}, w_acc);
    return multiply + reduction_cc(add, w_acc, rows);
}

double convolution_cc_approx(int p, double width, double rows) {
    if (p < 3 || p % 2 == 0) throw ValidationError("p", "kernel size must be odd and >= 3");
    require_width(width);
    require_rows(rows);
    const double pp = static_cast<double>(p) * p;
    const double pixels_per_row = 8 + (p - 1) / 2;
    const double per_pixel = pp * oc_cycles({OpKind::MultFullApprox}, width) +
                             (pp - 1) * oc_cycles({OpKind::Add}, 2 * width);
    const double copies = width * p * (p - 1) * pixels_per_row + (p - 1) * rows;
    return pixels_per_row * per_pixel + copies;
}

ConvolutionCycles convolution_cc(int p, double width, double rows) {
    if (p < 3 || p % 2 == 0) throw ValidationError("p", "kernel size must be odd and >= 3");
    if (width == 8) {
        if (p == 3 && rows == 512) return {69296, false};
        if (p == 3 && rows == 1024) return {77488, false};
        if (p == 5 && rows == 512) return {188592, false};
        if (p == 5 && rows == 1024) return {204976, false};
    }
    return {convolution_cc_approx(p, width, rows), true};
}

FloatCycles floatpim_cc(double nm, double ne) {
    if (!std::isfinite(nm) || nm < 1) throw ValidationError("nm", "nm must be >= 1");
    if (!std::isfinite(ne) || ne < 1) throw ValidationError("ne", "ne must be >= 1");
    FloatCycles out;
    out.t_mul = 12 * ne + 6.5 * nm * nm + 7.5 * nm - 2;
    const double nor_cycles = 3 + 16 * ne + 19 * nm + nm * nm;
    const double search_cycles = 2 * nm + 1;
    out.t_add = nor_cycles + search_cycles;
    return out;
}

std::string_view to_string(OpKind k) {
    for (const auto& [kind, name] : kOpNames)
        if (kind == k) return name;
    return "?";
}

std::string_view to_string(LayoutClass l) {
    for (const auto& [layout, name] : kLayoutNames)
        if (layout == l) return name;
    return "?";
}

std::optional<OpKind> parse_op_kind(std::string_view s) {
    for (const auto& [kind, name] : kOpNames)
        if (name == s) return kind;
    return std::nullopt;
}

std::optional<LayoutClass> parse_layout(std::string_view s) {
    for (const auto& [layout, name] : kLayoutNames)
        if (name == s) return layout;
    return std::nullopt;
}

}  // namespace bitlet::complexity
