#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace specpos {

enum class ErrorCode {
    MixedFields,
    DivisionByZero,
    MixedAmbient,
    WrongDimension,
    DimensionMismatch,
    CenterContainsX,
    AmbientMismatch,
    BudgetExceeded,
    RationalFieldUnsupported,
    ValidityRegimeViolated,
    ExtensionFailed,
    NotSpInput,
    BellBudgetExceeded,
    MismatchedReport,
    InsufficientPoints,
    SpanTooBig,
    FieldTooSmall,
    MalformedCertificate,
    InvalidInput,
};

/// Library-wide exception. `detail()` carries a numeric payload where the
/// contract asks for one (e.g. the offending count for BudgetExceeded).
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message, std::uint64_t detail = 0)
        : std::runtime_error(message), code_(code), detail_(detail) {}

    ErrorCode code() const noexcept { return code_; }
    std::uint64_t detail() const noexcept { return detail_; }

  private:
    ErrorCode code_;
    std::uint64_t detail_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message, std::uint64_t detail = 0) {
    throw Error(code, message, detail);
}

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::MixedFields: return "MixedFields";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::MixedAmbient: return "MixedAmbient";
        case ErrorCode::WrongDimension: return "WrongDimension";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::CenterContainsX: return "CenterContainsX";
        case ErrorCode::AmbientMismatch: return "AmbientMismatch";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::RationalFieldUnsupported: return "RationalFieldUnsupported";
        case ErrorCode::ValidityRegimeViolated: return "ValidityRegimeViolated";
        case ErrorCode::ExtensionFailed: return "ExtensionFailed";
        case ErrorCode::NotSpInput: return "NotSpInput";
        case ErrorCode::BellBudgetExceeded: return "BellBudgetExceeded";
        case ErrorCode::MismatchedReport: return "MismatchedReport";
        case ErrorCode::InsufficientPoints: return "InsufficientPoints";
        case ErrorCode::SpanTooBig: return "SpanTooBig";
        case ErrorCode::FieldTooSmall: return "FieldTooSmall";
        case ErrorCode::MalformedCertificate: return "MalformedCertificate";
        case ErrorCode::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

}  // namespace specpos
