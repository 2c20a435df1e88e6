#pragma once

#include <stdexcept>

namespace potcyc {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text or an argument outside an operation's contract.
struct precondition_error : error {
    using error::error;
};

// A configured search budget was exhausted before the search finished.
struct budget_error : error {
    using error::error;
};

// A desk-scale enumeration cap was exceeded. Reported distinctly from a
// failed verdict: the question was refused, not answered.
struct cap_error : error {
    using error::error;
};

// A step whose success is guaranteed failed anyway. Signals a bug in this
// library (or a wrong claim it relies on); callers should abort loudly.
struct internal_error : error {
    using error::error;
};

} // namespace potcyc
