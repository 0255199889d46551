#pragma once

#include <stdexcept>
#include <string>

namespace c2q {

enum class ErrorCode {
    DivisionByZero,
    ZeroPolynomial,
    ZeroDenominator,
    FieldMismatch,
    ZeroScalar,
    ZeroSlot,
    ZeroAlpha,
    SlotMismatch,
    AlgebraMismatch,
    UnsupportedField,
    SearchBoundExceeded,
    LambdaSquareEqualsBeta,
    BetaEqualsAlphaSquared,
    FoldTooSmall,
    SingularForm,
    ParseError,
    InvalidArgument,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Parse failure with a 1-based line/column position in the input text.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int column);

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

} // namespace c2q
