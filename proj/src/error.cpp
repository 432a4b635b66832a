#include "cyclemis/error.hpp"

namespace cyclemis {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::BadEndpoint: return "BadEndpoint";
    case ErrorCode::LoopRejected: return "LoopRejected";
    case ErrorCode::NotCompleteComponents: return "NotCompleteComponents";
    case ErrorCode::MalformedGraph6: return "MalformedGraph6";
    case ErrorCode::CountOverflow: return "CountOverflow";
    case ErrorCode::NoBlocks: return "NoBlocks";
    case ErrorCode::NotTwoConnected: return "NotTwoConnected";
    case ErrorCode::BadParameters: return "BadParameters";
    }
    return "Unknown";
}

} // namespace cyclemis
