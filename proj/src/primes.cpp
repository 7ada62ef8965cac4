#include "gclass/primes.hpp"

#include <algorithm>
#include <cmath>

namespace gclass {

PrimeTable build_prime_table(std::uint64_t limit, std::uint64_t limit_cap) {
    if (limit < 2)
        throw InvalidInput("prime table limit must be >= 2, got " + std::to_string(limit));
    if (limit > limit_cap)
        throw SieveBudgetError("prime table limit " + std::to_string(limit) +
                               " exceeds the configured cap " + std::to_string(limit_cap));
    // Hard ceiling regardless of the configured cap: above this, limit^2 and
    // (n-1)^2 no longer fit in 64 bits.
    if (limit > kMaxSupportedN)
        throw SieveBudgetError("prime table limit " + std::to_string(limit) +
                               " exceeds the supported maximum " +
                               std::to_string(kMaxSupportedN));

    // Odds-only Eratosthenes bitmap: index i stands for 2i+1.
    const std::uint64_t half = limit / 2;
    std::vector<bool> composite(half + 1, false);
    for (std::uint64_t i = 1; (2 * i + 1) * (2 * i + 1) <= limit; ++i) {
        if (composite[i])
            continue;
        const std::uint64_t p = 2 * i + 1;
        for (std::uint64_t j = (p * p) / 2; j <= half; j += p)
            composite[j] = true;
    }

    std::vector<std::uint64_t> primes;
    primes.push_back(2);
    for (std::uint64_t i = 1; 2 * i + 1 <= limit; ++i)
        if (!composite[i])
            primes.push_back(2 * i + 1);
    return PrimeTable(limit, std::move(primes));
}

bool PrimeTable::contains(std::uint64_t x) const noexcept {
    return std::binary_search(primes_.begin(), primes_.end(), x);
}

bool is_prime(std::uint64_t x, const PrimeTable& table) {
    if (x < 2)
        return false;
    if (x <= table.limit())
        return table.contains(x);
    if (x > table.certifiable_bound())
        throw InvalidInput("is_prime(" + std::to_string(x) + ") beyond certifiable bound " +
                           std::to_string(table.certifiable_bound()));
    for (std::uint64_t p : table.primes()) {
        if (p * p > x)
            return true;
        if (x % p == 0)
            return false;
    }
    return true; // sqrt(x) <= limit, so the loop above always decides first
}

std::uint64_t smallest_prime_factor(std::uint64_t x, const PrimeTable& table) {
    if (x < 2)
        throw InvalidInput("smallest_prime_factor requires x >= 2, got " + std::to_string(x));
    if (x > table.certifiable_bound())
        throw InvalidInput("smallest_prime_factor(" + std::to_string(x) +
                           ") beyond certifiable bound " +
                           std::to_string(table.certifiable_bound()));
    for (std::uint64_t p : table.primes()) {
        if (p * p > x)
            return x;
        if (x % p == 0)
            return p;
    }
    return x;
}

std::uint64_t smallest_prime_factor_of_multiple(std::uint64_t m, std::uint64_t p,
                                                const PrimeTable& table) {
    if (m < 1 || m % 2 == 0 || p % 2 == 0 || p < 3)
        throw InvalidInput("smallest_prime_factor_of_multiple requires odd m >= 1 and odd p >= 3");
    if (p > table.limit())
        throw InvalidInput("factor p " + std::to_string(p) + " beyond table limit " +
                           std::to_string(table.limit()));
    // spf(m*p) = min(spf(m), p); m is odd, so start past 2.
    auto primes = table.primes();
    for (std::size_t i = 1; i < primes.size(); ++i) {
        const std::uint64_t q = primes[i];
        if (q >= p)
            return p;
        if (q * q > m)
            return m > 1 ? std::min(m, p) : p;
        if (m % q == 0)
            return q;
    }
    // Unreachable: q reaches p <= limit before the table runs out.
    throw InternalError("prime table exhausted factoring " + std::to_string(m) + " * " +
                        std::to_string(p));
}

} // namespace gclass
