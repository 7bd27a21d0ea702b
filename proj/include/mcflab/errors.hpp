#pragma once

#include <stdexcept>
#include <string>

namespace mcflab {

// Bad user-supplied configuration (specs, family parameters, CLI input).
struct config_error : std::runtime_error {
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Geometry does not fit the requested discretization (surface exits grid, etc).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// NaN/Inf appeared during time stepping.
struct blowup_error : std::runtime_error {
    blowup_error(const std::string& msg, long step) : std::runtime_error(msg), step_index(step) {}
    long step_index;
};

// The zero level set is gone; the caller must stop evolving.
struct extinction_signal : std::runtime_error {
    explicit extinction_signal(const std::string& msg) : std::runtime_error(msg) {}
};

// Invariant violated inside the library itself; always a bug, never user error.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace mcflab
