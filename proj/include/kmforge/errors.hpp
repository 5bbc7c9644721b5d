#pragma once

#include <stdexcept>
#include <string>

namespace kmforge {

// Raised for malformed or oversized input; the CLI maps it to exit code 1.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when a certified assertion fails. This means either a bug in the
// implementation or inputs that contradict a proved property; the CLI maps
// it to exit code 2.
struct CertificateError : std::runtime_error {
    explicit CertificateError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace kmforge
