#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace atq {

/**
 * DomainError: violated precondition or malformed input.
 *
 * The code is a stable machine-readable identifier (e.g. "chop_too_large",
 * "smooth_tensor_undefined"); the message is free text for humans. The CLI
 * maps any DomainError to exit status 1 and prints {"error": code, ...}.
 */
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code))
    {
    }

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

}  // namespace atq
