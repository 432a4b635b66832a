#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclemis {

enum class ErrorCode {
    OrderTooLarge,
    BadEndpoint,
    LoopRejected,
    NotCompleteComponents,
    MalformedGraph6,
    CountOverflow,
    NoBlocks,
    NotTwoConnected,
    BadParameters,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace cyclemis
