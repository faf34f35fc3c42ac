#pragma once

#include <stdexcept>
#include <string>

namespace isolation {

// Malformed graph6 input (bad length, byte out of range, trailing garbage).
struct Graph6Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A size or work cap was exceeded. Raising the cap is a configuration
// choice, never a silent degradation.
struct CapExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace isolation
