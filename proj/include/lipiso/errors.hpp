#pragma once

#include <stdexcept>
#include <string>

namespace lipiso {

// Bad user input: malformed JSON, dimension mismatch, invalid pair, out-of-range parameter.
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A broken internal invariant, e.g. two independent decision routes disagreeing.
// Reaching this is a bug, never a data condition.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace lipiso
