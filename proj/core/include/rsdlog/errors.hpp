#ifndef RSDLOG_ERRORS_HPP
#define RSDLOG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rsdlog {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Violated precondition or malformed input. CLI maps these to exit code 2.
struct InputError : Error {
    using Error::Error;
};

/// A computation that is well-posed but infeasible under the configured
/// budgets (enumeration caps, state-dimension caps, draw budgets).
/// CLI maps these to exit code 1.
struct ComputeError : Error {
    using Error::Error;
};

// -- input errors ------------------------------------------------------

struct NotPrime : InputError {
    explicit NotPrime(unsigned long long p)
        : InputError("not a prime: " + std::to_string(p)) {}
};
struct Reducible : InputError {
    explicit Reducible(const std::string& what)
        : InputError("polynomial is reducible: " + what) {}
};
struct DegreeMismatch : InputError {
    using InputError::InputError;
};
struct DivisionByZero : InputError {
    DivisionByZero() : InputError("division by zero") {}
};
struct FieldMismatch : InputError {
    FieldMismatch() : InputError("operands belong to different fields") {}
};
struct LengthMismatch : InputError {
    using InputError::InputError;
};
struct DuplicatePoint : InputError {
    using InputError::InputError;
};
struct DegreeTooHigh : InputError {
    using InputError::InputError;
};
struct RadiusTooLarge : InputError {
    using InputError::InputError;
};
struct WrongWitnessSize : InputError {
    using InputError::InputError;
};
struct DegenerateTower : InputError {
    using InputError::InputError;
};
struct OutOfRange : InputError {
    using InputError::InputError;
};
struct BadParams : InputError {
    using InputError::InputError;
};
struct NotInSubgroup : InputError {
    using InputError::InputError;
};

// -- budget / feasibility errors ---------------------------------------

struct FieldTooLarge : ComputeError {
    using ComputeError::ComputeError;
};
struct CodeTooLarge : ComputeError {
    using ComputeError::ComputeError;
};
struct StateTooLarge : ComputeError {
    using ComputeError::ComputeError;
};
struct InstanceTooLarge : ComputeError {
    using ComputeError::ComputeError;
};
struct CannotFactor : ComputeError {
    using ComputeError::ComputeError;
};
struct BudgetExceeded : ComputeError {
    using ComputeError::ComputeError;
};
struct VanishingCoset : ComputeError {
    using ComputeError::ComputeError;
};
struct NoExactWeightSolution : ComputeError {
    using ComputeError::ComputeError;
};
struct DecoderNotTotal : ComputeError {
    using ComputeError::ComputeError;
};

} // namespace rsdlog

#endif
