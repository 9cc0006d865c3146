#include "bitlet/usecases.hpp"

#include <cmath>
#include <vector>

#include "bitlet/quantities.hpp"

namespace bitlet::usecases {

namespace {

template <class... Ts>
struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void size_ok(std::vector<FieldError>& out, const char* f, double v) {
    if (!std::isfinite(v) || v < 0) out.push_back({f, std::string(f) + " must be >= 0"});
}

void selectivity_ok(std::vector<FieldError>& out, double p) {
    if (!std::isfinite(p) || p < 0 || p > 1) out.push_back({"p", "p must be in [0, 1]"});
}

double index_bits(const Filter2& f, double n) {
    const double bits = std::log2(n);
    return f.ceil_index_bits ? std::ceil(bits) : bits;
}

}  // namespace

void validate(const UseCase& uc, double n) {
    std::vector<FieldError> errors;
    if (!std::isfinite(n) || n < 1) errors.push_back({"n", "n must be >= 1"});
    std::visit(overloaded{
                   [&](const CpuPure& u) { size_ok(errors, "s", u.s); },
                   [&](const CpuPureTwoPass& u) {
                       size_ok(errors, "s", u.s);
                       size_ok(errors, "s1", u.s1);
                       selectivity_ok(errors, u.p);
                   },
                   [&](const PimPure& u) { size_ok(errors, "s", u.s); },
                   [&](const Compact& u) {
                       size_ok(errors, "s", u.s);
                       size_ok(errors, "s1", u.s1);
                       if (u.s1 > u.s) errors.push_back({"s1", "s1 must be <= s"});
                   },
                   [&](const Filter1& u) {
                       size_ok(errors, "s", u.s);
                       selectivity_ok(errors, u.p);
                   },
                   [&](const Filter2& u) {
                       size_ok(errors, "s", u.s);
                       selectivity_ok(errors, u.p);
                   },
                   [&](const Hybrid& u) {
                       size_ok(errors, "s", u.s);
                       size_ok(errors, "s1", u.s1);
                       selectivity_ok(errors, u.p);
                   },
                   [&](const Reduction0& u) {
                       size_ok(errors, "s", u.s);
                       size_ok(errors, "s1", u.s1);
                   },
                   [&](const Reduction1& u) {
                       size_ok(errors, "s", u.s);
                       size_ok(errors, "s1", u.s1);
                       if (!std::isfinite(u.r) || u.r < 1) errors.push_back({"r", "r must be >= 1"});
                   },
               },
               uc);
    if (!errors.empty()) throw ValidationError(std::move(errors));
}

double baseline_bits(const UseCase& uc, double n) {
    validate(uc, n);
    return n * cpu_pure_dio(uc);
}

double cpu_pure_dio(const UseCase& uc) {
    return std::visit([](const auto& u) { return u.s; }, uc);
}

double total_transfer_bits(const UseCase& uc, double n) {
    validate(uc, n);
    return std::visit(overloaded{
                          [&](const CpuPure& u) { return n * u.s; },
                          [&](const CpuPureTwoPass& u) { return n * u.s1 + n * u.p * u.s; },
                          [&](const PimPure&) { return 0.0; },
                          [&](const Compact& u) { return n * u.s1; },
                          [&](const Filter1& u) { return n * u.p * u.s + n; },
                          [&](const Filter2& u) { return n * u.p * (u.s + index_bits(u, n)); },
                          [&](const Hybrid& u) { return n * u.p * u.s1 + n; },
                          [&](const Reduction0& u) { return u.s1; },
                          [&](const Reduction1& u) { return std::ceil(n / u.r) * u.s1; },
                      },
                      uc);
}

double dio_per_computation(const UseCase& uc, double n) {
    if (const auto* red = std::get_if<Reduction1>(&uc)) {
        validate(uc, n);
        return red->s1 / red->r;
    }
    return total_transfer_bits(uc, n) / n;
}

double transfer_reduction_bits(const UseCase& uc, double n) {
    return baseline_bits(uc, n) - total_transfer_bits(uc, n);
}

double hybrid_reduction_as_printed(const Hybrid& h, double n) {
    validate(h, n);
    return n * (h.s - 1) - n * h.p * h.s1;
}

std::string_view name_of(const UseCase& uc) {
    return std::visit(overloaded{
                          [](const CpuPure&) { return std::string_view("cpu_pure"); },
                          [](const CpuPureTwoPass&) { return std::string_view("cpu_pure_two_pass"); },
                          [](const PimPure&) { return std::string_view("pim_pure"); },
                          [](const Compact&) { return std::string_view("compact"); },
                          [](const Filter1&) { return std::string_view("filter1"); },
                          [](const Filter2&) { return std::string_view("filter2"); },
                          [](const Hybrid&) { return std::string_view("hybrid"); },
                          [](const Reduction0&) { return std::string_view("reduction0"); },
                          [](const Reduction1&) { return std::string_view("reduction1"); },
                      },
                      uc);
}

}  // namespace bitlet::usecases
