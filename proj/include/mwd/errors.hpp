#pragma once

#include <stdexcept>
#include <string>

namespace mwd {

// Malformed or out-of-contract input (bad modulus, dimension mismatch,
// unparsable file, ...). CLI maps this to exit code 2.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An enumeration guard tripped (state space too large to enumerate
// exactly). CLI maps this to exit code 3.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace mwd
