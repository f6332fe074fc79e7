#ifndef ALPHATHETA_ERRORS_HPP
#define ALPHATHETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace alphatheta {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input or invalid generator parameters.
class InputError : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its domain (size caps, non-regular input, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Every alpha0-family quantity needs at least one edge.
class EdgelessGraphError : public PreconditionError {
public:
    EdgelessGraphError() : PreconditionError("rejected: m = 0 (graph has no edges)") {}
};

/// The SDP solver did not reach the requested accuracy.
class SolverError : public Error {
public:
    using Error::Error;
};

/// A certificate failed its own feasibility or objective check.
class CertificateError : public Error {
public:
    using Error::Error;
};

} // namespace alphatheta

#endif // ALPHATHETA_ERRORS_HPP
