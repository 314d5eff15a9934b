#pragma once

#include <stdexcept>

namespace rootposet {

/// A computed quantity disagrees with the closed form it is checked against.
class VerificationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The operation is not defined for this root system (e.g. short roots of a simply-laced one).
class UnsupportedInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed; indicates a bug rather than bad input.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace rootposet
