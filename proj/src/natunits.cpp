#include "comptonqcd/natunits.hpp"

#include "comptonqcd/error.hpp"

#include <charconv>
#include <cmath>
#include <string>

namespace comptonqcd {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidQuantity: return "InvalidQuantity";
        case ErrorCode::DimensionError: return "DimensionError";
        case ErrorCode::DivByZero: return "DivByZero";
        case ErrorCode::InvalidMass: return "InvalidMass";
        case ErrorCode::RegimeError: return "RegimeError";
        case ErrorCode::InvalidDimension: return "InvalidDimension";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::SingularConfiguration: return "SingularConfiguration";
        case ErrorCode::NoBoundState: return "NoBoundState";
        case ErrorCode::GridTooSmall: return "GridTooSmall";
        case ErrorCode::InvalidSource: return "InvalidSource";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

std::string to_string(const Rational& q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw Error(ErrorCode::ParseError,
                    "not a rational number: '" + std::string(whole) + "'");
    return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text, text));
    const auto num = parse_int(text.substr(0, slash), text);
    const auto den = parse_int(text.substr(slash + 1), text);
    if (den == 0)
        throw Error(ErrorCode::ParseError,
                    "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

Quantity::Quantity(double value, int dim) : value_(value), dim_(dim) {
    if (!std::isfinite(value))
        throw Error(ErrorCode::InvalidQuantity, "quantity value must be finite");
}

Quantity make_quantity(double value, int dim) { return Quantity(value, dim); }

Quantity qarith(const Quantity& a, const Quantity& b, ArithOp op) {
    switch (op) {
        case ArithOp::Add:
        case ArithOp::Sub:
            if (a.dim() != b.dim())
                throw Error(ErrorCode::DimensionError,
                            "cannot combine mass dimension " + std::to_string(a.dim()) +
                                " with " + std::to_string(b.dim()));
            return Quantity(op == ArithOp::Add ? a.value() + b.value()
                                               : a.value() - b.value(),
                            a.dim());
        case ArithOp::Mul:
            return Quantity(a.value() * b.value(), a.dim() + b.dim());
        case ArithOp::Div:
            if (b.value() == 0.0)
                throw Error(ErrorCode::DivByZero, "division by a zero quantity");
            return Quantity(a.value() / b.value(), a.dim() - b.dim());
    }
    throw Error(ErrorCode::DomainError, "unknown arithmetic operation");
}

Quantity operator+(const Quantity& a, const Quantity& b) { return qarith(a, b, ArithOp::Add); }
Quantity operator-(const Quantity& a, const Quantity& b) { return qarith(a, b, ArithOp::Sub); }
Quantity operator*(const Quantity& a, const Quantity& b) { return qarith(a, b, ArithOp::Mul); }
Quantity operator/(const Quantity& a, const Quantity& b) { return qarith(a, b, ArithOp::Div); }
Quantity operator*(double s, const Quantity& q) { return Quantity(s * q.value(), q.dim()); }
Quantity operator*(const Quantity& q, double s) { return Quantity(s * q.value(), q.dim()); }

Quantity compton_wavelength(const Quantity& m) {
    if (m.dim() != 1)
        throw Error(ErrorCode::DimensionError, "Compton wavelength needs a mass");
    if (!(m.value() > 0.0))
        throw Error(ErrorCode::InvalidMass, "mass must be positive");
    return Quantity(1.0 / m.value(), -1);
}

std::string_view to_string(E2Mode mode) noexcept {
    switch (mode) {
        case E2Mode::Paper: return "paper";
        case E2Mode::Precise: return "precise";
        case E2Mode::Unit: return "unit";
    }
    return "paper";
}

E2Mode parse_e2_mode(std::string_view text) {
    if (text == "paper" || text == "paper-137") return E2Mode::Paper;
    if (text == "precise") return E2Mode::Precise;
    if (text == "unit") return E2Mode::Unit;
    throw Error(ErrorCode::ParseError, "unknown e2 mode '" + std::string(text) + "'");
}

Rational fine_structure_exact(E2Mode mode) {
    switch (mode) {
        case E2Mode::Paper: return Rational(1, 137);
        // 1/137.035999
        case E2Mode::Precise: return Rational(1000000, 137035999);
        case E2Mode::Unit: return Rational(1);
    }
    return Rational(1, 137);
}

Quantity fine_structure_constant(E2Mode mode) {
    return Quantity(to_double(fine_structure_exact(mode)), 0);
}

}  // namespace comptonqcd
