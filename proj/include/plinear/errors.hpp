#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace plinear {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in different rings (variable count, modulus, coefficient kind).
class RingMismatch : public Error {
public:
    using Error::Error;
};

/// The convex hull of a support set has empty interior in R^n.
class NotFullDimensional : public Error {
public:
    using Error::Error;
};

/// A Cartier image left the region the geometry promises.
class SupportEscape : public Error {
public:
    using Error::Error;
};

/// A t-polynomial exceeded its degree bound.
class DegreeEscape : public Error {
public:
    using Error::Error;
};

/// Numerator support is not inside the allowed open region.
class PrecondNumeratorSupport : public Error {
public:
    using Error::Error;
};

/// The prime divides the constant term of the denominator.
class BadConstantTerm : public Error {
public:
    using Error::Error;
};

/// A desk-scale oracle cap was exceeded.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// Malformed or inconsistent scheme file.
class SchemeFormatError : public Error {
public:
    using Error::Error;
};

/// Polynomial text that does not match the grammar.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

} // namespace plinear
