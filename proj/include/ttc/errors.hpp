#pragma once

#include <stdexcept>
#include <string>

namespace ttc {

// Bad numeric argument (out-of-range family size, zero scale factor, ...).
struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed structure: size mismatches, loops, duplicate edges, dangling
// indices, ill-formed certificates.
struct structural_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Operation applied to a graph family it does not support.
struct family_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A documented precondition of an operation does not hold for the input.
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A constructive colorer produced output that failed its own re-verification.
// Must never fire; any occurrence is a bug in the construction.
struct construction_error : std::logic_error {
    using std::logic_error::logic_error;
};

// The case machinery of a constructive colorer found no applicable branch on
// an input its preconditions accept.  The branch set is meant to be
// exhaustive, so any occurrence is a finding worth reporting.
struct uncovered_case_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace ttc
