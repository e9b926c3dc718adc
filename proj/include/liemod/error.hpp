#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "liemod/matrix.hpp"

namespace liemod {

enum class ErrorKind {
    DimensionMismatch,
    Singular,
    SkewViolation,
    JacobiViolation,
    RepViolation,
    NotIdeal,
    NotSubalgebra,
    NotStable,
    ImageEscapesH,
    QuotientError,
    NotCocycle,
    NotAdmissible,
    NotOOperator,
    NotCompatible,
    NotNijenhuis,
    NotNijenhuisStructure,
    NotONStructure,
    NotPN,
    NotAntisymmetric,
    NotComplementary,
    NotStrongMC,
    InvalidGCS,
    NotComplexPair,
    NotComplexStructure,
    MalformedLift,
    PreconditionFailed,
    OracleDisagreement,
    Parse,
    Resolution,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library. `witness` holds basis indices that
/// locate the defect and `defect` the offending nonzero value when one exists.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what, std::vector<std::size_t> witness = {},
          Vec defect = {})
        : std::runtime_error(std::string(to_string(kind)) + ": " + what),
          kind_(kind),
          witness_(std::move(witness)),
          defect_(std::move(defect)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::vector<std::size_t>& witness() const noexcept { return witness_; }
    const Vec& defect() const noexcept { return defect_; }

private:
    ErrorKind kind_;
    std::vector<std::size_t> witness_;
    Vec defect_;
};

/// Outcome of an identity check: either satisfied, or the first failing
/// clause together with its basis-index witness and nonzero defect.
struct Check {
    bool ok = true;
    std::string clause;
    std::vector<std::size_t> witness;
    Vec defect;

    static Check pass() { return {}; }
    static Check fail(std::string clause, std::vector<std::size_t> witness, Vec defect = {}) {
        return {false, std::move(clause), std::move(witness), std::move(defect)};
    }
    explicit operator bool() const noexcept { return ok; }
};

}  // namespace liemod
