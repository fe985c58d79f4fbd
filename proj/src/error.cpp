#include "newsscope/error.hpp"

namespace newsscope {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::validation_error: return "validation_error";
        case ErrorCode::not_found: return "not_found";
        case ErrorCode::internal: return "internal";
    }
    return "internal";
}

}  // namespace newsscope
