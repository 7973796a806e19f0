#pragma once

#include <stdexcept>
#include <string>

namespace exergas {

/// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad user input: malformed values, out-of-range knobs, wrong basis, ...
class InvalidInputError : public Error {
public:
    using Error::Error;
};

/// Species/fuel data file could not be parsed; carries the 1-based line number.
class ParseError : public InvalidInputError {
public:
    ParseError(const std::string& msg, int line)
        : InvalidInputError(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
    int line() const { return line_; }

private:
    int line_ = 0;
};

/// A species required by the model is absent from the database.
class MissingSpeciesError : public InvalidInputError {
public:
    explicit MissingSpeciesError(const std::string& name)
        : InvalidInputError("species database is missing required species '" + name + "'"),
          species_(name) {}
    const std::string& species() const { return species_; }

private:
    std::string species_;
};

/// Polynomial segments of a species leave a gap or overlap in temperature.
class RangeGapError : public InvalidInputError {
public:
    using InvalidInputError::InvalidInputError;
};

/// Property evaluation requested outside the tabulated temperature range.
class OutOfRangeError : public InvalidInputError {
public:
    using InvalidInputError::InvalidInputError;
};

/// The equilibrium solver failed to converge.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& msg, double residual, int iterations)
        : Error(msg), residual_(residual), iterations_(iterations) {}
    double residual() const { return residual_; }
    int iterations() const { return iterations_; }

private:
    double residual_ = 0.0;
    int iterations_ = 0;
};

/// An internal consistency check failed (e.g. negative exergy destruction).
class ModelInconsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace exergas
