#ifndef BIFURCATA_ERRORS_HPP
#define BIFURCATA_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bifurcata {

// Caller-facing error taxonomy. The CLI maps these onto exit codes:
// user/precondition problems exit 2, internal invariant violations exit 1.

// Malformed structural input: mismatched variable sets, bindings outside the
// coefficient tower, misuse of an API (e.g. splitting on an invertible witness).
class StructuralError : public std::runtime_error {
public:
    explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

// Degenerate mathematical input (zero polynomial where a curve is expected, ...).
class DegenerateInputError : public std::runtime_error {
public:
    explicit DegenerateInputError(const std::string& what) : std::runtime_error(what) {}
};

// A documented precondition does not hold (non-squarefree modulus, bad prime,
// polynomial not convenient, smoothness hypothesis violated, ...).
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// The Jacobian ideal of f is not zero-dimensional, so the per-value Milnor
// data (and everything derived from it) is undefined for this input.
class NonIsolatedError : public PreconditionError {
public:
    explicit NonIsolatedError(const std::string& what) : PreconditionError(what) {}
};

// An enumeration would exceed the configured budget. Never silently truncated.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Syntax error in a polynomial expression; carries 1-based position info.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error(what), line_(line), column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// A broken internal invariant. Reaching this is a bug, not a user error.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline void check_internal(bool cond, const char* msg) {
    if (!cond) throw InternalError(msg);
}

}  // namespace bifurcata

#endif
