#pragma once

#include <stdexcept>
#include <string>

namespace vgcdf {

// Argument outside the mathematical domain of a function (x <= 0, z >= 1, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Distribution parameters violate their constraints.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A series or iteration hit its term/iteration budget before the stopping rule fired.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Unscaled result is not representable; request the exponentially scaled form instead.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// A computed quantity left the range it is mathematically confined to by more than
// rounding noise. Signals an upstream numerical failure.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace vgcdf
