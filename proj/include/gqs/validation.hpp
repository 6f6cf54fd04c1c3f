#pragma once

#include <stdexcept>
#include <string>

namespace gqs {

// Precondition failure with a stable machine-readable code, e.g. "c1.least_prime_factor".
class ValidationError : public std::invalid_argument {
public:
    ValidationError(std::string code, const std::string& message)
        : std::invalid_argument(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

} // namespace gqs
