#pragma once

#include <stdexcept>
#include <string>

namespace bergex {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (alpha <= -1, zero kernel, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// The operation has no exact/symbolic route for this exponent (e.g. odd p).
class UnsupportedExponentError : public Error {
public:
    using Error::Error;
};

/// Inputs fall outside the range where a certificate's hypotheses hold.
class HypothesisError : public Error {
public:
    using Error::Error;
};

/// A certificate could not be formed from otherwise valid inputs (delta >= 1, c_hat <= 0).
class CertificateError : public Error {
public:
    using Error::Error;
};

/// Malformed external input; the message names the offending field.
class InputError : public Error {
public:
    using Error::Error;
};

} // namespace bergex
