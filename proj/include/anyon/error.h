#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace anyon {

enum class ErrorKind {
    invalid_argument,
    dimension_mismatch,
    resource_limit,
    numerical_failure,
    incomplete_model,
    unsupported_model,
    consistency_failure,
    condensation_rejected,
    invalid_decomposition,
    invalid_stabilizer_set,
    frustrated_projector,
    parse_error,
};

std::string_view error_kind_name(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it onto an exit code without string matching.
class AnyonError : public std::runtime_error {
   public:
    AnyonError(ErrorKind kind, const std::string &message);

    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string &message);

}  // namespace anyon
