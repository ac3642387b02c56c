#pragma once

#include <stdexcept>
#include <string>

namespace sllt {

enum class ErrorKind {
    Parse,
    EmptyComposition,
    IndexOutOfRange,
    NonCommutingSwap,
    PreconditionViolated,
    NormalizationFailed,
    NotUnicellular,
    NotSymmetric,
    InsufficientVariables,
    NonIntegralCoefficient,
    MismatchedVariableCount,
    InexactDivision,
    ZeroPolynomial,
    NotRealizedWithinBound,
    HypothesisViolated,
    BlockNotSeparable,
    GraphsNotIsomorphic,
};

const char* kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
    throw Error(kind, msg);
}

} // namespace sllt
