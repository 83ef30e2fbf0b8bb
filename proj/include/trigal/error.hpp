#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trigal {

enum class ErrorCode {
    NotPrime,
    ReducibleModulus,
    DegreeMismatch,
    DivisionByZero,
    FieldMismatch,
    ZeroPolynomial,
    ConstantPolynomial,
    ContextMismatch,
    NonMonicRelation,
    UnknownVariable,
    TooFewPoints,
    DegreeTooLarge,
    UnknownName,
    MissingDataFile,
    BudgetExceeded,
    BadK,
    InvalidShape,
    NotCoprime,
    BadExponent,
    BadCharacteristic,
    AmbiguousPGL,
    CharacteristicMismatch,
    EmptyStats,
    BadExponents,
    BadParameters,
    ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace trigal
