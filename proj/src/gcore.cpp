#include "gclass/gcore.hpp"

#include <algorithm>

namespace gclass {

namespace {

// (a - b) mod m with the result in [0, m-1], even when a < b.
std::uint64_t euclid_mod_diff(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    if (a >= b)
        return (a - b) % m;
    return (m - (b - a) % m) % m;
}

} // namespace

std::uint64_t g_of(std::uint64_t x, std::uint64_t p) {
    if (p == 0 || p % 2 == 0)
        throw InvalidInput("g(x, p) requires odd p >= 1, got p = " + std::to_string(p));
    if (x < 2)
        throw InvalidInput("g(x, p) requires x >= 2, got x = " + std::to_string(x));
    const std::uint64_t two_p = checked_mul(2, p);
    const std::uint64_t bound = checked_add(x, two_p);
    const std::uint64_t g = bound - euclid_mod_diff(x, p, two_p);
    // Least odd multiple of p above x: both sides of the contract hold by
    // construction, but they are cheap and guard the unsigned arithmetic.
    if (g <= x || g - x > two_p || g % p != 0 || (g / p) % 2 == 0)
        throw InternalError("g(" + std::to_string(x) + ", " + std::to_string(p) +
                            ") produced inconsistent value " + std::to_string(g));
    return g;
}

P1Result p1_of(std::uint64_t n, const PrimeTable& table) {
    if (n <= 2)
        throw InvalidInput("p1(n) requires n > 2, got n = " + std::to_string(n));
    if (n > table.limit())
        throw InvalidInput("p1(" + std::to_string(n) + ") needs a prime table up to n, have " +
                           std::to_string(table.limit()));

    const std::uint64_t x = (n - 1) * (n - 1);
    auto primes = table.primes();
    auto it = std::upper_bound(primes.begin(), primes.end(), n);

    // Walk the odd primes <= n downward. Every value satisfies
    // f(g(x, p)) <= p, so once best exceeds p nothing below can win;
    // at best == p a tie is still possible and would lower the witness.
    P1Result best{0, 0};
    while (it != primes.begin()) {
        --it;
        const std::uint64_t p = *it;
        if (p == 2)
            break;
        if (best.p1 > p)
            break;
        const std::uint64_t g = g_of(x, p);
        const std::uint64_t f = smallest_prime_factor_of_multiple(g / p, p, table);
        if (f > best.p1)
            best = {f, p};
        else if (f == best.p1)
            best.witness_p = p;
    }
    return best;
}

GRecord is_g_number(std::uint64_t two_n, const PrimeTable& table) {
    if (two_n % 2 != 0)
        throw InvalidInput("G-number predicate applies to even numbers, got " +
                           std::to_string(two_n));
    if (two_n < 6)
        throw InvalidInput("G-number predicate requires 2n >= 6, got " + std::to_string(two_n));

    const std::uint64_t n = two_n / 2;
    const auto [p1, witness] = p1_of(n, table);

    GRecord rec;
    rec.n = n;
    rec.two_n = two_n;
    rec.p1 = p1;
    rec.witness_p = witness;
    rec.g_value = g_of((n - 1) * (n - 1), p1);
    rec.k1 = rec.g_value / p1;
    rec.is_g = rec.g_value == p1 * (two_n - p1);

    // Independent route through the expanded identity
    //   2n = n^2 + (p1+1)^2 - 2n*p1 - ((n-1)^2 - p1) mod (2*p1).
    // n^2 + (p1+1)^2 - 2n*p1 = (n-p1)^2 + 2*p1 + 1 > 0, so the unsigned
    // subtraction below cannot wrap.
    const std::uint64_t lhs = n * n + (p1 + 1) * (p1 + 1) - 2 * n * p1;
    const std::uint64_t rem = ((n - 1) * (n - 1) - p1) % (2 * p1);
    const bool expanded_is_g = lhs - rem == two_n;
    if (expanded_is_g != rec.is_g)
        throw InternalError("product and expanded G tests disagree at 2n = " +
                            std::to_string(two_n));
    return rec;
}

Decomposition decompose(const GRecord& record, const PrimeTable& table) {
    if (!record.is_g)
        throw InvalidInput(std::to_string(record.two_n) +
                           " is not a G number; no decomposition is claimed for it");
    if (!is_prime(record.p1, table))
        throw InternalError("p1 = " + std::to_string(record.p1) + " failed primality at 2n = " +
                            std::to_string(record.two_n));
    if (!is_prime(record.k1, table))
        throw TheoremViolation("counterexample: 2n = " + std::to_string(record.two_n) +
                               " is a G number but k1 = " + std::to_string(record.k1) +
                               " is composite");
    if (record.p1 + record.k1 != record.two_n)
        throw InternalError("p1 + k1 != 2n at 2n = " + std::to_string(record.two_n));
    return Decomposition{record.two_n, record.p1, record.k1};
}

} // namespace gclass
