#include "c2q/error.hpp"

namespace c2q {

const char* to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ZeroScalar: return "ZeroScalar";
    case ErrorCode::ZeroSlot: return "ZeroSlot";
    case ErrorCode::ZeroAlpha: return "ZeroAlpha";
    case ErrorCode::SlotMismatch: return "SlotMismatch";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::SearchBoundExceeded: return "SearchBoundExceeded";
    case ErrorCode::LambdaSquareEqualsBeta: return "LambdaSquareEqualsBeta";
    case ErrorCode::BetaEqualsAlphaSquared: return "BetaEqualsAlphaSquared";
    case ErrorCode::FoldTooSmall: return "FoldTooSmall";
    case ErrorCode::SingularForm: return "SingularForm";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
{
}

ParseError::ParseError(const std::string& msg, int line, int column)
    : Error(ErrorCode::ParseError,
            msg + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
      line_(line), column_(column)
{
}

} // namespace c2q
