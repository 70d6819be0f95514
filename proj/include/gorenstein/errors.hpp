#pragma once

#include <stdexcept>
#include <string>

namespace gorenstein {

/// Malformed or out-of-range input. Maps to CLI exit code 2.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input is well formed but violates a mathematical hypothesis of the
/// requested operation (e.g. classifying a web whose gin is generic).
/// Maps to CLI exit code 3.
class HypothesisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal invariant was breached. Maps to CLI exit code 4.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace gorenstein
