#pragma once

#include <stdexcept>
#include <string>

namespace simploc {

/// Malformed or inconsistent input (bad files, out-of-range ids, broken
/// invariants of a user-supplied structure). The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A triangle list / boundary pair that is not a simplicial disc.
class InvalidDisc : public InputError {
public:
    using InputError::InputError;
};

/// A disc diagram surgery whose preconditions do not hold, or whose gluing
/// would leave the class of disc diagrams. Inputs are never modified.
class SurgeryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The flattened wheel metric is undefined for the disc; carries the two
/// offending wheel centers when the failure is an overlap.
class MetricUndefined : public std::runtime_error {
public:
    MetricUndefined(const std::string& what, int first = -1, int second = -1)
        : std::runtime_error(what), first_center(first), second_center(second) {}

    int first_center;
    int second_center;
};

} // namespace simploc
