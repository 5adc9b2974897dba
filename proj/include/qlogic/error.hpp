#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qlogic {

enum class ErrorKind {
    DivisionByZero,
    FieldMismatch,
    DimensionMismatch,
    SizeCapExceeded,
    ParseError,
    InvalidArgument,
    NotInvertible,
    NotCompatible,
    NotCompatibleSet,
    DegeneratePair,
    CriterionDisagreement,
    UnclassifiableClique,
    IndexOutOfRange,
    NotMembers,
    NotOrthoApartment,
    AssumptionViolated,
    NotComplementClosed,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. `kind()` lets callers branch without
/// string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace qlogic
