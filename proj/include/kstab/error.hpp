#pragma once

#include <stdexcept>
#include <string>

namespace kstab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Interpolation input with repeated nodes or no samples at all.
class MalformedSamples : public Error {
public:
    using Error::Error;
};

/// A polynomial came out with a degree other than the one the geometry dictates.
class DegreeMismatch : public Error {
public:
    using Error::Error;
};

/// Weight vectors or exponent vectors whose lengths do not match the ambient shape.
class LengthMismatch : public Error {
public:
    using Error::Error;
};

/// Two computation routes that must agree did not.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

/// The zero bilinear form, which cuts out no hypersurface.
class NotAHypersurface : public Error {
public:
    using Error::Error;
};

/// r = 0: the hypersurface is a union of two components and not normal.
class NotNormal : public Error {
public:
    using Error::Error;
};

/// The destabilizing construction needs m != n or a singular hypersurface.
class MethodInapplicable : public Error {
public:
    using Error::Error;
};

/// A one-parameter subgroup whose weights do not sum to zero on some factor.
class NotSpecialLinear : public Error {
public:
    using Error::Error;
};

/// The terms of the defining polynomial have different weights.
class NotPreserved : public Error {
public:
    using Error::Error;
};

/// Malformed certificate text, CSV matrix or rational literal.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace kstab
