#pragma once

#include <stdexcept>
#include <string>

namespace spindec {

/// Invalid input (rank mismatch, non-dominant label, descriptor violation).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured cap was exceeded (Weyl rank, representation dimension).
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Internal consistency violation; indicates a bug, never bad input.
struct InternalError : std::runtime_error {
    explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace spindec
