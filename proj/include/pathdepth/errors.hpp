#pragma once

#include <stdexcept>
#include <string>

namespace pathdepth {

// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input (ideal files, certificates).
struct input_error : error {
    using error::error;
};

// Two objects from rings of different variable counts were combined.
struct ring_mismatch_error : input_error {
    using input_error::input_error;
};

// A parameter is outside the documented range of an operation.
struct parameter_error : error {
    using error::error;
};

// Checked exponent arithmetic left the 31-bit range.
struct exponent_overflow_error : error {
    using error::error;
};

// A configured cap (generator count, lattice size, poset size, vertex
// count, exact-arithmetic width) was exceeded. Always a clean failure,
// never a silent wrong answer.
struct resource_limit_error : error {
    using error::error;
};

// The wall-clock budget for a single search ran out. Callers report
// "unknown", never a value.
struct timeout_error : error {
    using error::error;
};

// An operation that needs a proper nonzero ideal got the zero or unit
// ideal (or pair mode got J not contained in I).
struct domain_error : error {
    using error::error;
};

} // namespace pathdepth
