#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace avgroups {

enum class ErrorCode {
    InvalidArgument,
    MalformedPolynomial,
    MalformedGroup,
    NotPrime,
    ZeroPolynomial,
    ConstantTermVanishes,
    NotSquarefree,
    NotWeil,
    WrongOrder,
    TooManyGenerators,
    PolygonConditionViolated,
    SingularMatrix,
    SpanMismatch,
    FactorsNotNested,
    BudgetExceeded,
};

/// Stable snake_case name, used as the machine-readable code in JSON output.
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace avgroups
