#pragma once

#include <stdexcept>
#include <string>

namespace hsalg {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A bracket left the span of the algebra's basis.
class ClosureError : public Error {
public:
    using Error::Error;
};

/// A catalog spec is outside the supported parameter range.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// A structural invariant failed; signals a bug rather than bad input.
class StructureError : public Error {
public:
    using Error::Error;
};

/// An argument is not in the subspace an operation is defined on.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Mismatched lengths or dimensions.
class ShapeError : public Error {
public:
    using Error::Error;
};

class NonIntegralWeight : public Error {
public:
    using Error::Error;
};

/// Operands built from different (pair, target, eta) contexts.
class MismatchError : public Error {
public:
    using Error::Error;
};

class SingularConjugator : public Error {
public:
    using Error::Error;
};

class Unsupported : public Error {
public:
    using Error::Error;
};

/// Malformed input document. `where` names the file/field when known.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace hsalg
