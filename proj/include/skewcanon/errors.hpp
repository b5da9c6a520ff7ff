#ifndef SKEWCANON_ERRORS_HPP
#define SKEWCANON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace skewcanon {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input data violates a structural invariant (bad matrix shape, bad file,
/// degenerate form, broken spectrum symmetry, ...). CLI exit code 1.
class ValidationError : public Error {
public:
    using Error::Error;
};

class NotSymmetric : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DegenerateForm : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NotSkewadjoint : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NotInvariant : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DegenerateRestriction : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class SingularMatrix : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// The minimal polynomial does not have the +/- paired spectrum of a
/// skewadjoint operator; the input pair cannot be valid.
class NotSkewSpectrum : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Exact mode requires all block parameters to be rational; raised when a
/// factor has irrational roots.
class UnsupportedField : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// A float-mode decision (rank, cluster, residual) is too ambiguous to
/// trust; the computation aborts rather than guessing. CLI exit code 2.
class NumericalFailure : public Error {
public:
    using Error::Error;
};

} // namespace skewcanon

#endif
