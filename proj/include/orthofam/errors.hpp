#pragma once

#include <stdexcept>
#include <string>

namespace orthofam {

/// A parameter set violates one of its domain invariants.
class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The coefficient multiplying the next polynomial in a recurrence vanished.
class DegenerateRecurrence : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A truncated Jacobi operator could not be symmetrized (a_n^2 <= 0).
class StructuralError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The tridiagonal QL sweep exceeded its iteration cap.
class IterationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A call-site precondition (index window, coefficient family, ...) failed.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// eval_Q_limit cannot certify its truncation tail below the requested tolerance.
class RadiusExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The sign bracket around a reciprocal node did not contain a zero of Q.
class NoZeroFound : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace orthofam
