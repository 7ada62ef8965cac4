#pragma once

#include <cstdint>

#include "gclass/primes.hpp"

namespace gclass {

// Everything known about one even number 2n.
struct GRecord {
    std::uint64_t n = 0;
    std::uint64_t two_n = 0;
    std::uint64_t p1 = 0;        // max of f(g((n-1)^2, p)) over odd primes p <= n
    std::uint64_t g_value = 0;   // g((n-1)^2, p1)
    std::uint64_t k1 = 0;        // g_value / p1
    bool is_g = false;           // g_value == p1 * (2n - p1)
    std::uint64_t witness_p = 0; // smallest odd prime attaining the maximum

    friend bool operator==(const GRecord&, const GRecord&) = default;
};

// A pair of primes summing to two_n.
struct Decomposition {
    std::uint64_t two_n = 0;
    std::uint64_t first = 0;
    std::uint64_t second = 0;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

struct P1Result {
    std::uint64_t p1 = 0;
    std::uint64_t witness_p = 0;

    friend bool operator==(const P1Result&, const P1Result&) = default;
};

// Smallest odd multiple of p strictly exceeding x, as
// x + 2p - ((x - p) mod 2p) with a Euclidean (nonnegative) remainder.
// p must be odd (not necessarily prime); x >= 2.
std::uint64_t g_of(std::uint64_t x, std::uint64_t p);

// max f(g((n-1)^2, p)) over odd primes p <= n, plus the smallest prime
// attaining it. Requires 3 <= n <= table.limit().
P1Result p1_of(std::uint64_t n, const PrimeTable& table);

// Full dossier for an even 2n >= 6. The membership flag is computed from the
// product form g = p1*(2n - p1) and cross-checked against the expanded
// mod form; a disagreement throws InternalError.
GRecord is_g_number(std::uint64_t two_n, const PrimeTable& table);

// The (p1, k1) decomposition of a G number, with both components
// primality-verified. Rejects non-G records; a composite k1 throws
// TheoremViolation, since it would contradict the two-primes theorem.
Decomposition decompose(const GRecord& record, const PrimeTable& table);

} // namespace gclass
