#pragma once

#include <stdexcept>
#include <string>

namespace gkw {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on the inputs was violated; nothing was computed.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A computation started but could not produce a trustworthy result
/// (divergence, non-convergence, blow-up). `diagnostics` carries the
/// residual history or conditioning information gathered before failure.
class ComputationError : public Error {
public:
    ComputationError(const std::string& what, std::string diagnostics = {})
        : Error(what), diagnostics_(std::move(diagnostics)) {}

    const std::string& diagnostics() const noexcept { return diagnostics_; }

private:
    std::string diagnostics_;
};

inline void require(bool condition, const std::string& message) {
    if (!condition) throw InvalidArgument(message);
}

}  // namespace gkw
