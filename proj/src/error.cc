#include "anyon/error.h"

namespace anyon {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::invalid_argument:
            return "invalid-argument";
        case ErrorKind::dimension_mismatch:
            return "dimension-mismatch";
        case ErrorKind::resource_limit:
            return "resource-limit";
        case ErrorKind::numerical_failure:
            return "numerical-failure";
        case ErrorKind::incomplete_model:
            return "incomplete-model";
        case ErrorKind::unsupported_model:
            return "unsupported-model";
        case ErrorKind::consistency_failure:
            return "consistency-failure";
        case ErrorKind::condensation_rejected:
            return "condensation-rejected";
        case ErrorKind::invalid_decomposition:
            return "invalid-decomposition";
        case ErrorKind::invalid_stabilizer_set:
            return "invalid-stabilizer-set";
        case ErrorKind::frustrated_projector:
            return "frustrated-projector";
        case ErrorKind::parse_error:
            return "parse-error";
    }
    return "unknown";
}

AnyonError::AnyonError(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {
}

void fail(ErrorKind kind, const std::string &message) {
    throw AnyonError(kind, message);
}

}  // namespace anyon
