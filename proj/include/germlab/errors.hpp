#pragma once

#include <stdexcept>
#include <string>

namespace germlab {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input: syntax errors, unknown variables, schema violations.
class InputError : public Error {
public:
    explicit InputError(const std::string& msg) : Error(msg) {}
};

/// Mathematically degenerate input: non-isolated singularities, germs
/// without finite singularity type, non-reduced discriminants, signatures
/// that no finite germ realizes.
class DegenerateError : public Error {
public:
    explicit DegenerateError(const std::string& msg) : Error(msg) {}
};

/// Randomized genericity failed even after escalating the coefficient bound.
class GenericityError : public Error {
public:
    explicit GenericityError(const std::string& msg) : Error(msg) {}
};

/// Internal consistency check failed; indicates a bug, not bad input.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& msg) : Error("internal error: " + msg) {}
};

} // namespace germlab
