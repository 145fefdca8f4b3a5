#pragma once

#include <stdexcept>
#include <string>

namespace bichroma {

// Malformed input: bad parameters, unknown vertices/edges, parse failures.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Request exceeds a configured budget (enumeration size, canonical-key cap).
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Focus kind not admissible for the operation (e.g. a loop as edge focus).
struct unsupported_focus_error : input_error {
    using input_error::input_error;
};

} // namespace bichroma
