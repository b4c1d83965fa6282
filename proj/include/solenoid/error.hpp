#pragma once

#include <stdexcept>
#include <string>

namespace solenoid {

/// Every module reports failures through this type. `code` is a short
/// machine-readable tag ("unsupported_dimension", "non_surjective", ...)
/// that the CLI copies into its error JSON.
class Error : public std::runtime_error
{
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code))
    {
    }

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

} // namespace solenoid
