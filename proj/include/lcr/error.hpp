#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lcr {

/// Hard failures: malformed input, broken preconditions, or alarms that can
/// only fire when an upstream invariant has been violated. Algebraic axiom
/// failures are not errors; they are reported as violation lists.
enum class ErrorCode {
    NonSquareTable,
    ZeroNotAtIndexZero,
    OrderTooLarge,
    ShapeMismatch,
    DecompositionNotDirect,
    GradingViolation,
    SubringNotUnital,
    NotASubrng,
    NotGradedIntegral,
    PNotPrime,
    NoWitness,
    BridgeAxiomFailure,
    ZeroB,
    NonUnitalHom,
    MalformedDocument,
    UnknownKind,
    Usage,
};

constexpr std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::NonSquareTable: return "NonSquareTable";
    case ErrorCode::ZeroNotAtIndexZero: return "ZeroNotAtIndexZero";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::DecompositionNotDirect: return "DecompositionNotDirect";
    case ErrorCode::GradingViolation: return "GradingViolation";
    case ErrorCode::SubringNotUnital: return "SubringNotUnital";
    case ErrorCode::NotASubrng: return "NotASubrng";
    case ErrorCode::NotGradedIntegral: return "NotGradedIntegral";
    case ErrorCode::PNotPrime: return "PNotPrime";
    case ErrorCode::NoWitness: return "NoWitness";
    case ErrorCode::BridgeAxiomFailure: return "BridgeAxiomFailure";
    case ErrorCode::ZeroB: return "ZeroB";
    case ErrorCode::NonUnitalHom: return "NonUnitalHom";
    case ErrorCode::MalformedDocument: return "MalformedDocument";
    case ErrorCode::UnknownKind: return "UnknownKind";
    case ErrorCode::Usage: return "Usage";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace lcr
