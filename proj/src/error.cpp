#include "trigal/error.hpp"

namespace trigal {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::NonMonicRelation: return "NonMonicRelation";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::MissingDataFile: return "MissingDataFile";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::BadK: return "BadK";
    case ErrorCode::InvalidShape: return "InvalidShape";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::BadExponent: return "BadExponent";
    case ErrorCode::BadCharacteristic: return "BadCharacteristic";
    case ErrorCode::AmbiguousPGL: return "AmbiguousPGL";
    case ErrorCode::CharacteristicMismatch: return "CharacteristicMismatch";
    case ErrorCode::EmptyStats: return "EmptyStats";
    case ErrorCode::BadExponents: return "BadExponents";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace trigal
