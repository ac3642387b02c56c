#include "stripllt/errors.hpp"

namespace sllt {

const char* kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::EmptyComposition: return "EmptyComposition";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NonCommutingSwap: return "NonCommutingSwap";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NormalizationFailed: return "NormalizationFailed";
    case ErrorKind::NotUnicellular: return "NotUnicellular";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::InsufficientVariables: return "InsufficientVariables";
    case ErrorKind::NonIntegralCoefficient: return "NonIntegralCoefficient";
    case ErrorKind::MismatchedVariableCount: return "MismatchedVariableCount";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotRealizedWithinBound: return "NotRealizedWithinBound";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::BlockNotSeparable: return "BlockNotSeparable";
    case ErrorKind::GraphsNotIsomorphic: return "GraphsNotIsomorphic";
    }
    return "Error";
}

} // namespace sllt
