// error.hpp
// Error taxonomy shared by the whole library.  Every throwing operation uses
// Error with a stable ErrorCode so callers (and the CLI) can report a
// machine-readable name.

#pragma once

#include <stdexcept>
#include <string>

namespace ellrot {

enum class ErrorCode {
    NonPositiveCoefficient,
    DimensionTooSmall,
    DimensionMismatch,
    WrongVectorCount,
    ZeroVector,
    AxisNotUnit,
    NotSkew,
    NotARotation,
    SingularMatrix,
    SingularResolvent,
    HalfTurn,
    NormMismatch,
    AntipodalInput,
    ZeroQuaternion,
    NotUnit,
    SpaceMismatch,
    InvalidArgument,
};

[[nodiscard]] inline const char* to_string(ErrorCode code) noexcept
{
    switch (code) {
        case ErrorCode::NonPositiveCoefficient: return "NonPositiveCoefficient";
        case ErrorCode::DimensionTooSmall:      return "DimensionTooSmall";
        case ErrorCode::DimensionMismatch:      return "DimensionMismatch";
        case ErrorCode::WrongVectorCount:       return "WrongVectorCount";
        case ErrorCode::ZeroVector:             return "ZeroVector";
        case ErrorCode::AxisNotUnit:            return "AxisNotUnit";
        case ErrorCode::NotSkew:                return "NotSkew";
        case ErrorCode::NotARotation:           return "NotARotation";
        case ErrorCode::SingularMatrix:         return "SingularMatrix";
        case ErrorCode::SingularResolvent:      return "SingularResolvent";
        case ErrorCode::HalfTurn:               return "HalfTurn";
        case ErrorCode::NormMismatch:           return "NormMismatch";
        case ErrorCode::AntipodalInput:         return "AntipodalInput";
        case ErrorCode::ZeroQuaternion:         return "ZeroQuaternion";
        case ErrorCode::NotUnit:                return "NotUnit";
        case ErrorCode::SpaceMismatch:          return "SpaceMismatch";
        case ErrorCode::InvalidArgument:        return "InvalidArgument";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message)
        , code_(code)
    {
    }

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }
    [[nodiscard]] const char* name() const noexcept { return to_string(code_); }

private:
    ErrorCode code_;
};

// Default tolerances.  Absolute at unit scale; operations that compare
// matrices of larger magnitude scale them by max(1, |M|_inf).
inline constexpr double kDefaultTol = 1e-9;
inline constexpr double kTightTol = 1e-12;
inline constexpr double kAxisUnitTol = 1e-6;

}  // namespace ellrot
