#include "otto_lgi/error.hpp"

namespace otto_lgi {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::StepTooLarge: return "StepTooLarge";
    case ErrorKind::NoQuantumPhase: return "NoQuantumPhase";
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::InfeasibleCycle: return "InfeasibleCycle";
    case ErrorKind::NoFixedPoint: return "NoFixedPoint";
    case ErrorKind::NotBracketed: return "NotBracketed";
    case ErrorKind::AxisName: return "AxisNameError";
    case ErrorKind::UnknownKey: return "UnknownKey";
    case ErrorKind::BadValue: return "BadValue";
    case ErrorKind::MissingRequired: return "MissingRequired";
    case ErrorKind::Usage: return "UsageError";
    }
    return "Error";
}

} // namespace otto_lgi
