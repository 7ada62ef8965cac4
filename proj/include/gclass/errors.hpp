#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gclass {

// Base class for everything this library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Arguments outside an operation's declared domain.
class InvalidInput : public Error {
public:
    using Error::Error;
};

// Sieve limit beyond the configured budget. Distinct from InvalidInput so
// callers can tell "you asked for something illegal" apart from "the machine
// cannot hold that".
class SieveBudgetError : public Error {
public:
    using Error::Error;
};

// Checked 64-bit arithmetic would wrap.
class OverflowError : public Error {
public:
    using Error::Error;
};

// Two supposedly equivalent computations disagreed. Always a bug in this
// library, never a property of the inputs.
class InternalError : public Error {
public:
    using Error::Error;
};

// A decomposition component failed its primality check. This would be a
// genuine counterexample to the two-primes theorem and must never be
// downgraded or swallowed.
class TheoremViolation : public Error {
public:
    using Error::Error;
};

// File I/O failure; the message carries the offending path.
class IoError : public Error {
public:
    using Error::Error;
};

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("64-bit overflow in " + std::to_string(a) + " + " + std::to_string(b));
    return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("64-bit overflow in " + std::to_string(a) + " * " + std::to_string(b));
    return r;
}

} // namespace gclass
