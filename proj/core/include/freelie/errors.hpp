#pragma once

#include <stdexcept>
#include <string>

namespace freelie {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Series division whose low-order coefficients are not forced.
struct DivisionByNonUnit : Error {
    using Error::Error;
};

/// Two independent closed forms of the same quantity disagreed; an arithmetic bug.
struct InternalMismatch : Error {
    using Error::Error;
};

/// truncated_exp on a polynomial with nonzero constant term, or truncated_log
/// on one whose constant term is not 1.
struct BadConstantTerm : Error {
    using Error::Error;
};

/// A word contains a letter outside the declared alphabet split.
struct AlphabetViolation : Error {
    using Error::Error;
};

/// An exact linear system turned out inconsistent where theory forbids it.
struct SolveFailure : Error {
    using Error::Error;
};

/// A decomposition matrix that must be invertible was singular.
struct SingularSystem : Error {
    using Error::Error;
};

/// Position argument outside its admissible range.
struct InvalidPosition : Error {
    using Error::Error;
};

/// A word-basis axiom (A1)-(A6) failed; carries the witness in the message.
struct AxiomViolation : Error {
    using Error::Error;
};

/// Canonicalization requested for a polynomial that is not a Lie element.
struct NotLieElement : Error {
    using Error::Error;
};

/// Request outside the hard desk-scale caps.
struct DeskScaleExceeded : Error {
    using Error::Error;
};

/// Expression parse error with a 1-based source position.
struct SyntaxError : Error {
    SyntaxError(const std::string& msg, int line_, int column_)
        : Error(msg + " at " + std::to_string(line_) + ":" + std::to_string(column_)),
          line(line_),
          column(column_) {}
    int line;
    int column;
};

struct UnknownGenerator : SyntaxError {
    using SyntaxError::SyntaxError;
};

/// exp/log in an expression without an explicit truncation order.
struct TruncationMissing : SyntaxError {
    using SyntaxError::SyntaxError;
};

struct UsageError : Error {
    using Error::Error;
};

}  // namespace freelie
