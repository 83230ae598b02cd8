#pragma once

#include <stdexcept>
#include <string>

namespace torictodd {

// Base for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input data fails structural validation (bad rays, overlapping cones, ...).
struct invalid_fan_error : error {
    explicit invalid_fan_error(const std::string& msg) : error(msg) {}
};

// Operation requires a complete fan but the fan is not complete.
struct incomplete_fan_error : error {
    explicit incomplete_fan_error(const std::string& msg) : error(msg) {}
};

// A quantity that must be rational came out with a nonzero cyclotomic part.
// This indicates an internal inconsistency, not bad input.
struct rationality_error : error {
    explicit rationality_error(const std::string& msg) : error(msg) {}
};

}  // namespace torictodd
