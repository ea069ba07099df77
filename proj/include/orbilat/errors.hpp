#pragma once

#include <stdexcept>
#include <string>

namespace orbilat {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument violates a documented precondition. The CLI maps this to exit code 2.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An exact computation contradicted an invariant that must hold for valid input,
/// e.g. an index that should be a perfect square is not. The CLI maps this to exit code 1.
class InconsistencyError : public Error {
public:
    using Error::Error;
};

inline void require(bool condition, const std::string& message)
{
    if (!condition)
        throw PreconditionError(message);
}

inline void ensure(bool condition, const std::string& message)
{
    if (!condition)
        throw InconsistencyError(message);
}

} // namespace orbilat
