#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace carlitz {

enum class ErrorCode {
    NonPrimeP,
    ReducibleModulus,
    UnsupportedQ,
    InvalidArgument,
    DivisionByZero,
    FieldMismatch,
    BothZero,
    ModulusConstant,
    ZeroInput,
    ConstantInput,
    RangeOutOfBounds,
    ExpansionTooLarge,
    QIsTwo,
    NotMonicPrime,
    DegreeTooSmall,
    DegreeTooLarge,
    SamePrime,
    ParseError,
    InvariantViolation,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// All library failures are reported through this exception; `code()` is
/// stable and is what the CLI maps onto exit codes and error JSON.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace carlitz
