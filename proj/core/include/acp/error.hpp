#pragma once

#include <stdexcept>
#include <string>

namespace acp {

// Every failure surfaced to callers carries a stable machine-readable code
// plus a human explanation.  The CLI serializes these to one-line JSON.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

inline Error domain_error(const std::string& msg) { return Error("DomainError", msg); }

}  // namespace acp
