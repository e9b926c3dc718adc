#include "liemod/error.hpp"

namespace liemod {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::Singular: return "Singular";
        case ErrorKind::SkewViolation: return "SkewViolation";
        case ErrorKind::JacobiViolation: return "JacobiViolation";
        case ErrorKind::RepViolation: return "RepViolation";
        case ErrorKind::NotIdeal: return "NotIdeal";
        case ErrorKind::NotSubalgebra: return "NotSubalgebra";
        case ErrorKind::NotStable: return "NotStable";
        case ErrorKind::ImageEscapesH: return "ImageEscapesH";
        case ErrorKind::QuotientError: return "QuotientError";
        case ErrorKind::NotCocycle: return "NotCocycle";
        case ErrorKind::NotAdmissible: return "NotAdmissible";
        case ErrorKind::NotOOperator: return "NotOOperator";
        case ErrorKind::NotCompatible: return "NotCompatible";
        case ErrorKind::NotNijenhuis: return "NotNijenhuis";
        case ErrorKind::NotNijenhuisStructure: return "NotNijenhuisStructure";
        case ErrorKind::NotONStructure: return "NotONStructure";
        case ErrorKind::NotPN: return "NotPN";
        case ErrorKind::NotAntisymmetric: return "NotAntisymmetric";
        case ErrorKind::NotComplementary: return "NotComplementary";
        case ErrorKind::NotStrongMC: return "NotStrongMC";
        case ErrorKind::InvalidGCS: return "InvalidGCS";
        case ErrorKind::NotComplexPair: return "NotComplexPair";
        case ErrorKind::NotComplexStructure: return "NotComplexStructure";
        case ErrorKind::MalformedLift: return "MalformedLift";
        case ErrorKind::PreconditionFailed: return "PreconditionFailed";
        case ErrorKind::OracleDisagreement: return "OracleDisagreement";
        case ErrorKind::Parse: return "ParseError";
        case ErrorKind::Resolution: return "ResolutionError";
    }
    return "Unknown";
}

}  // namespace liemod
