#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace spaceforms {

enum class ErrorKind {
    NotInGroup,
    NotProper,
    ConvergenceFailure,
    DegenerateSpan,
    InvariantViolation,
    SyntaxError,
    UnsupportedDimension,
    RangeError,
    NoMatch,
    AmbiguousMatch,
    InternalInconsistency,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above; the CLI
/// maps kinds onto exit codes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Parse failure with the zero-based character offset where it was detected.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& message)
        : Error(ErrorKind::SyntaxError,
                message + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

inline std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::NotInGroup: return "NotInGroup";
    case ErrorKind::NotProper: return "NotProper";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::DegenerateSpan: return "DegenerateSpan";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::RangeError: return "RangeError";
    case ErrorKind::NoMatch: return "NoMatch";
    case ErrorKind::AmbiguousMatch: return "AmbiguousMatch";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    }
    return "Unknown";
}

} // namespace spaceforms
