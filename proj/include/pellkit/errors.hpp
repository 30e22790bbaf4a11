#pragma once

#include <stdexcept>
#include <string>

namespace pellkit {

// Input violates a documented precondition.
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A verified classical theorem failed on concrete data; always a bug,
// either in the code or in the stated theorem.
struct theorem_violation : std::logic_error {
    using std::logic_error::logic_error;
};

// A derivation step that is provably exact turned out not to be.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Desk-scale guard exceeded.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pellkit
