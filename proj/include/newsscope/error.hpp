#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace newsscope {

/// Machine-readable error classes surfaced by every public operation.
enum class ErrorCode { validation_error, not_found, internal };

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message, std::string field = {})
        : std::runtime_error(std::move(message)), code_(code), field_(std::move(field)) {}

    ErrorCode code() const noexcept { return code_; }
    /// Name of the offending request field, empty when not applicable.
    const std::string& field() const noexcept { return field_; }

private:
    ErrorCode code_;
    std::string field_;
};

inline Error validation_error(std::string message, std::string field = {}) {
    return Error(ErrorCode::validation_error, std::move(message), std::move(field));
}

inline Error not_found(std::string message, std::string field = {}) {
    return Error(ErrorCode::not_found, std::move(message), std::move(field));
}

}  // namespace newsscope
