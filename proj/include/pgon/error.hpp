#pragma once

#include <stdexcept>
#include <string>

namespace pgon {

// Base of every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Leg counts, dimensions or indices that do not fit together.
class ShapeError : public Error {
public:
    using Error::Error;
};

// A precondition on values rather than shapes (n too small, bad group table).
class DomainError : public Error {
public:
    using Error::Error;
};

class SingularError : public DomainError {
public:
    using DomainError::DomainError;
};

// A constructor produced something that failed its own re-verification.
class VerificationError : public Error {
public:
    using Error::Error;
};

// Unreadable input files, unknown options.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace pgon
