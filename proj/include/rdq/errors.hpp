#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rdq {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Ranks, matrix shapes or group orders of two operands do not agree.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A value violates the documented constraints of a parameter struct.
class ParameterError : public Error {
public:
    using Error::Error;
};

class UnsupportedOrderError : public Error {
public:
    using Error::Error;
};

/// An operation was called on an input that does not satisfy its precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

class InfiniteFixedSetError : public Error {
public:
    using Error::Error;
};

/// The action could not be made regular within the subdivision budget.
class RegularityError : public Error {
public:
    using Error::Error;
};

/// Two independent computations of the same quantity disagree.
class IntegrityError : public Error {
public:
    using Error::Error;
};

class ResourceError : public Error {
public:
    using Error::Error;
};

/// Extrapolation did not settle; carries the sequence of estimates.
class NumericalFailure : public Error {
public:
    NumericalFailure(const std::string& what, std::vector<std::pair<double, double>> estimates)
        : Error(what), estimates_(std::move(estimates)) {}

    /// (real, imag) of each successive extrapolated estimate.
    const std::vector<std::pair<double, double>>& estimates() const noexcept { return estimates_; }

private:
    std::vector<std::pair<double, double>> estimates_;
};

/// Malformed or inconsistent instance data. `field()` is a JSON-pointer-like path.
class ValidationError : public Error {
public:
    ValidationError(std::string field, const std::string& what)
        : Error(field + ": " + what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

}  // namespace rdq
