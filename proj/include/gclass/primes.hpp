#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gclass/errors.hpp"

namespace gclass {

// Largest n this library accepts. Everything we ever compute for an even
// number 2n stays below (n-1)^2 + 4n, which fits in 64 bits for n <= 2^31.
inline constexpr std::uint64_t kMaxSupportedN = std::uint64_t{1} << 31;

// Default cap on the sieve bound; overridable per call (the CLI wires the
// GCLASS_TABLE_LIMIT environment variable into it).
inline constexpr std::uint64_t kDefaultTableLimitCap = kMaxSupportedN;

class PrimeTable;
PrimeTable build_prime_table(std::uint64_t limit,
                             std::uint64_t limit_cap = kDefaultTableLimitCap);

// Immutable ascending list of all primes <= limit. Safe to share across
// threads once built; all queries are read-only.
class PrimeTable {
public:
    std::uint64_t limit() const noexcept { return limit_; }
    std::span<const std::uint64_t> primes() const noexcept { return primes_; }

    // Membership among the sieved primes; x > limit is simply "not listed".
    bool contains(std::uint64_t x) const noexcept;

    // Largest x for which trial division over this table is conclusive.
    std::uint64_t certifiable_bound() const noexcept { return limit_ * limit_; }

private:
    PrimeTable(std::uint64_t limit, std::vector<std::uint64_t> primes)
        : limit_(limit), primes_(std::move(primes)) {}

    friend PrimeTable build_prime_table(std::uint64_t, std::uint64_t);

    std::uint64_t limit_;
    std::vector<std::uint64_t> primes_;
};

// True iff x is prime. Requires x <= table.certifiable_bound() so that trial
// division by table primes up to sqrt(x) is complete.
bool is_prime(std::uint64_t x, const PrimeTable& table);

// Least prime dividing x, for 2 <= x <= table.certifiable_bound(). If no
// table prime <= sqrt(x) divides x, x itself is prime.
std::uint64_t smallest_prime_factor(std::uint64_t x, const PrimeTable& table);

// Least prime dividing m*p, for odd m >= 1 and odd p in the table's range.
// Trial-divides the cofactor m, stopping at p: no prime >= p can beat p.
// Same trial division as smallest_prime_factor, but it never walks the table
// past min(sqrt(m), p), which is what makes large-range scans cheap.
std::uint64_t smallest_prime_factor_of_multiple(std::uint64_t m, std::uint64_t p,
                                                const PrimeTable& table);

} // namespace gclass
