#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace liqlab {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid input data or configuration. Carries the offending field name.
class ValidationError : public Error {
public:
    ValidationError(std::string field, const std::string& message)
        : Error(field + ": " + message), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// A computation whose mathematical preconditions do not hold
/// (zero capital, non-positive discount rate, zero variance, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A statistic was requested on a sample too small to support it.
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

/// A named builtin (SZ curve variant) that the library does not provide.
class UnsupportedVariantError : public Error {
public:
    using Error::Error;
};

/// Fatal file-level failure: unreadable input, missing mandatory header,
/// unwritable output.
class LoadError : public Error {
public:
    using Error::Error;
};

}  // namespace liqlab
