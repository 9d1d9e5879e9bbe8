#pragma once

#include <stdexcept>
#include <string>

namespace dihedral {

enum class ErrorKind {
    InvalidParameter,
    UnsupportedMode,
    UnsupportedCartan,
    UnsupportedExponent,
    CapExceeded,
    UndefinedSum,
    OutOfRange,
    BudgetExceeded,
    DomainError,
    Precondition,
    Infeasible,
    Unbounded,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidParameter: return "invalid-parameter";
    case ErrorKind::UnsupportedMode: return "unsupported-mode";
    case ErrorKind::UnsupportedCartan: return "unsupported-cartan";
    case ErrorKind::UnsupportedExponent: return "unsupported-exponent";
    case ErrorKind::CapExceeded: return "cap-exceeded";
    case ErrorKind::UndefinedSum: return "undefined-sum";
    case ErrorKind::OutOfRange: return "out-of-range";
    case ErrorKind::BudgetExceeded: return "budget-exceeded";
    case ErrorKind::DomainError: return "domain-error";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Infeasible: return "infeasible";
    case ErrorKind::Unbounded: return "unbounded";
    }
    return "error";
}

}  // namespace dihedral
