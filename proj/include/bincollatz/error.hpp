#pragma once

#include <stdexcept>
#include <string>

namespace bincollatz {

// Base of every error raised by the library. The CLI maps all of these to
// exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed textual input (bad digits, empty strings, zero).
class InvalidInput : public Error {
public:
    using Error::Error;
};

// Operation needs an odd (or even) value, or more trailing zeros than present.
class ParityError : public Error {
public:
    using Error::Error;
};

// Argument outside the modelled domain, e.g. f^-1(1) or a_0.
class DomainError : public Error {
public:
    using Error::Error;
};

// Request exceeds a configured size cap.
class ResourceError : public Error {
public:
    using Error::Error;
};

class CheckpointError : public Error {
public:
    using Error::Error;
};

// An identity that must always hold did not. Seeing one is a bug.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace bincollatz
