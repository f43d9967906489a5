#pragma once

#include <stdexcept>
#include <string>

namespace pwell {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Inputs outside an operation's mathematical or physical domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// The computation itself failed (no convergence, singular system, pole).
class NumericalError : public Error {
public:
    using Error::Error;
};

// Input parsing; the CLI reports these as usage errors.
class ParseError : public Error {
public:
    using Error::Error;
};

class UnknownUnit : public ParseError {
public:
    using ParseError::ParseError;
};

class MalformedNumber : public ParseError {
public:
    using ParseError::ParseError;
};

class NoSuchBranch : public DomainError {
public:
    using DomainError::DomainError;
};

/// Fit series extrapolated to a width where 1 - E/V0 goes negative.
class FitOutOfRange : public DomainError {
public:
    using DomainError::DomainError;
};

class ConvergenceFailure : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class SingularSystem : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class PoleSingularity : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class NoRoot : public NumericalError {
public:
    using NumericalError::NumericalError;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
    if (!ok) throw DomainError(what);
}

}  // namespace detail

}  // namespace pwell
