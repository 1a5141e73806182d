#include "avgroups/error.hpp"

namespace avgroups {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::MalformedPolynomial: return "malformed_polynomial";
    case ErrorCode::MalformedGroup: return "malformed_group";
    case ErrorCode::NotPrime: return "not_prime";
    case ErrorCode::ZeroPolynomial: return "zero_polynomial";
    case ErrorCode::ConstantTermVanishes: return "constant_term_vanishes";
    case ErrorCode::NotSquarefree: return "not_squarefree";
    case ErrorCode::NotWeil: return "not_weil";
    case ErrorCode::WrongOrder: return "wrong_order";
    case ErrorCode::TooManyGenerators: return "too_many_generators";
    case ErrorCode::PolygonConditionViolated: return "polygon_condition_violated";
    case ErrorCode::SingularMatrix: return "singular_matrix";
    case ErrorCode::SpanMismatch: return "span_mismatch";
    case ErrorCode::FactorsNotNested: return "factors_not_nested";
    case ErrorCode::BudgetExceeded: return "budget_exceeded";
    }
    return "unknown";
}

} // namespace avgroups
