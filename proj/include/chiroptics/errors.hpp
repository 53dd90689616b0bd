#pragma once

#include <stdexcept>
#include <string>

namespace chiroptics {

/// Bad or inconsistent input: violated type invariant, malformed file,
/// out-of-range index. Maps to CLI exit code 1.
class validation_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input is structurally valid but outside the numerical regime of the
/// requested formula: resonance hit, evanescent index, dilute expansion
/// blown, principal-value grid too coarse. Maps to CLI exit code 2.
class regime_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace chiroptics
