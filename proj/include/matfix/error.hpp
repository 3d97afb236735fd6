#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace matfix {

enum class ErrorCode {
    DimensionMismatch,
    NotSquare,
    NotHermitian,
    NotPositiveDefinite,
    NotFinite,
    NotReal,
    Singular,
    EigenFailure,
    MaxIterationsExceeded,
    SingularIterate,
    SingularOperator,
    ConditionViolated,
    NonzeroDeltaQ,
    Parse,
    InvalidArgument,
};

[[nodiscard]] constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotSquare: return "NotSquare";
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
        case ErrorCode::NotFinite: return "NotFinite";
        case ErrorCode::NotReal: return "NotReal";
        case ErrorCode::Singular: return "Singular";
        case ErrorCode::EigenFailure: return "EigenFailure";
        case ErrorCode::MaxIterationsExceeded: return "MaxIterationsExceeded";
        case ErrorCode::SingularIterate: return "SingularIterate";
        case ErrorCode::SingularOperator: return "SingularOperator";
        case ErrorCode::ConditionViolated: return "ConditionViolated";
        case ErrorCode::NonzeroDeltaQ: return "NonzeroDeltaQ";
        case ErrorCode::Parse: return "Parse";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Base error for every failure raised by the library. Carries a machine-readable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Raised by inverse() when the matrix is singular to working precision.
class SingularMatrixError : public Error {
public:
    SingularMatrixError(const std::string& what, double rcond)
        : Error(ErrorCode::Singular, what), rcond_(rcond) {}

    /// Reciprocal condition estimate at the time of failure.
    [[nodiscard]] double rcond() const noexcept { return rcond_; }

private:
    double rcond_;
};

struct Violation {
    ErrorCode code;
    std::string detail;
};

/// Aggregates every invariant violation found while validating an equation instance.
class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<Violation> violations)
        : Error(violations.empty() ? ErrorCode::DimensionMismatch : violations.front().code,
                summarize(violations)),
          violations_(std::move(violations)) {}

    [[nodiscard]] const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
    static std::string summarize(const std::vector<Violation>& v) {
        // The first code already prefixes the message.
        std::string out;
        for (const auto& item : v) {
            if (out.empty()) {
                out = item.detail;
            } else {
                out += "; " + std::string(to_string(item.code)) + ": " + item.detail;
            }
        }
        return out;
    }

    std::vector<Violation> violations_;
};

}  // namespace matfix
