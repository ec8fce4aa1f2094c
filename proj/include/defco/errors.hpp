#pragma once

#include <stdexcept>
#include <string>

namespace defco {

/// Malformed input: bad file contents, out-of-range colors, missing vertices.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An exhaustive or branching search was asked to go beyond its configured cap.
/// Raised instead of returning an unproven answer.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace defco
