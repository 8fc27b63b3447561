#pragma once

#include <stdexcept>
#include <string>

namespace ffsalem {

// Bad arguments: out-of-range residues, composite p, invalid probabilities.
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Work would exceed the configured budget (point count, subset enumeration).
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ffsalem
