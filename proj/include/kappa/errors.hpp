#pragma once

#include <stdexcept>
#include <string>

namespace kappa {

// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Non-finite or otherwise malformed input (NaN arguments, empty data, ...).
struct InputError : Error {
    explicit InputError(const std::string& what) : Error(what) {}
};

// Argument outside the mathematical domain of the operation, including
// convergence domains of series and transform guard conditions.
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

// Evaluation at a pole. `index` identifies the pole when one exists,
// e.g. the integer m with kappa*m = 1 for the deformed factorial.
struct PoleError : Error {
    PoleError(const std::string& what, long index_ = 0) : Error(what), index(index_) {}
    long index;
};

// Intermediate result exceeds double range where a finite answer was required.
struct OverflowError : Error {
    explicit OverflowError(const std::string& what) : Error(what) {}
};

// An extrapolation ladder or iteration failed to settle within budget.
struct ConvergenceError : Error {
    explicit ConvergenceError(const std::string& what) : Error(what) {}
};

// Regression data unusable for a tail fit (too few points, short span,
// nonpositive ordinates).
struct FitError : Error {
    explicit FitError(const std::string& what) : Error(what) {}
};

} // namespace kappa
