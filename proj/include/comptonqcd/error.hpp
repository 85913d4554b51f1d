#pragma once

#include <stdexcept>
#include <string>

namespace comptonqcd {

/// Failure categories shared by every module. The numeric values are part of
/// the C ABI (see comptonqcd.h) and must not be reordered.
enum class ErrorCode : int {
    InvalidQuantity = 1,
    DimensionError = 2,
    DivByZero = 3,
    InvalidMass = 4,
    RegimeError = 5,
    InvalidDimension = 6,
    DomainError = 7,
    SingularConfiguration = 8,
    NoBoundState = 9,
    GridTooSmall = 10,
    InvalidSource = 11,
    ParseError = 12,
    IoError = 13,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace comptonqcd
