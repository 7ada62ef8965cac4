#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gclass/primes.hpp"

using namespace gclass;

namespace {

// Oracles: per-integer trial division, no sieve, no shared code with the
// library path they check.
bool naive_is_prime(std::uint64_t x) {
    if (x < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= x; ++d)
        if (x % d == 0)
            return false;
    return true;
}

std::uint64_t naive_spf(std::uint64_t x) {
    for (std::uint64_t d = 2; d * d <= x; ++d)
        if (x % d == 0)
            return d;
    return x;
}

std::vector<std::uint64_t> naive_primes_upto(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 2; x <= limit; ++x)
        if (naive_is_prime(x))
            out.push_back(x);
    return out;
}

} // namespace

TEST_CASE("small tables match direct enumeration") {
    const auto t10 = build_prime_table(10);
    CHECK(std::vector<std::uint64_t>(t10.primes().begin(), t10.primes().end()) ==
          std::vector<std::uint64_t>{2, 3, 5, 7});

    const auto t2 = build_prime_table(2);
    CHECK(std::vector<std::uint64_t>(t2.primes().begin(), t2.primes().end()) ==
          std::vector<std::uint64_t>{2});
    CHECK(t2.limit() == 2);

    const auto t = build_prime_table(10000);
    const auto expected = naive_primes_upto(10000);
    REQUIRE(t.primes().size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(t.primes()[i] == expected[i]);

    // Every limit is its own boundary case.
    for (std::uint64_t limit = 2; limit <= 300; ++limit) {
        const auto table = build_prime_table(limit);
        std::vector<std::uint64_t> want;
        for (std::uint64_t p : expected) {
            if (p > limit)
                break;
            want.push_back(p);
        }
        REQUIRE_MESSAGE(std::vector<std::uint64_t>(table.primes().begin(),
                                                   table.primes().end()) == want,
                        "limit = ", limit);
    }
}

TEST_CASE("limit validation and budget are distinct errors") {
    CHECK_THROWS_AS(build_prime_table(0), InvalidInput);
    CHECK_THROWS_AS(build_prime_table(1), InvalidInput);
    CHECK_THROWS_AS(build_prime_table(1000, 999), SieveBudgetError);
    CHECK_NOTHROW(build_prime_table(999, 999));
    // The hard ceiling holds even when the configured cap is raised past it.
    CHECK_THROWS_AS(build_prime_table(kMaxSupportedN + 1, UINT64_MAX), SieveBudgetError);
}

TEST_CASE("prime count to 1e6 cross-checked by independent counter") {
    const auto t = build_prime_table(1000000);
    std::uint64_t counted = 0;
    for (std::uint64_t x = 2; x <= 1000000; ++x)
        if (naive_is_prime(x))
            ++counted;
    CHECK(counted == 78498);
    CHECK(t.primes().size() == counted);
    CHECK(t.primes().front() == 2);
    CHECK(t.primes().back() == 999983);
}

TEST_CASE("is_prime on anchors and bounds") {
    const auto t = build_prime_table(100);
    CHECK(is_prime(37, t));
    CHECK_FALSE(is_prime(1, t));
    CHECK_FALSE(is_prime(0, t));
    CHECK(is_prime(2, t));
    CHECK_FALSE(is_prime(1073, t)); // 29 * 37
    CHECK(is_prime(9973, t));       // above limit, below limit^2
    CHECK_THROWS_AS(is_prime(10001, t), InvalidInput);
}

TEST_CASE("smallest_prime_factor on anchors and bounds") {
    const auto t = build_prime_table(100);
    CHECK(smallest_prime_factor(1073, t) == 29);
    CHECK(smallest_prime_factor(9, t) == 3);
    CHECK(smallest_prime_factor(117, t) == 3);
    CHECK(smallest_prime_factor(9973, t) == 9973);
    CHECK_THROWS_AS(smallest_prime_factor(1, t), InvalidInput);
    CHECK_THROWS_AS(smallest_prime_factor(0, t), InvalidInput);
    CHECK_THROWS_AS(smallest_prime_factor(10001, t), InvalidInput);
}

TEST_CASE("spf and is_prime cohere over random samples") {
    const auto t = build_prime_table(10000);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        const std::uint64_t x = 2 + rng() % (10ull * 1000 * 1000);
        const std::uint64_t p = smallest_prime_factor(x, t);
        CHECK(x % p == 0);
        CHECK(p == naive_spf(x));
        CHECK(is_prime(x, t) == (p == x));
    }
}

TEST_CASE("membership agrees with primality inside the sieve") {
    const auto t = build_prime_table(5000);
    for (std::uint64_t x = 0; x <= 5000; ++x)
        CHECK(t.contains(x) == naive_is_prime(x));
}

TEST_CASE("spf of a known odd multiple matches the direct factorization") {
    const auto t = build_prime_table(10000);
    std::mt19937_64 rng(11);
    const auto primes = t.primes();
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t m = 2 * (rng() % 5000) + 1;
        std::uint64_t p = primes[1 + rng() % (primes.size() - 1)]; // odd primes only
        CHECK(smallest_prime_factor_of_multiple(m, p, t) == smallest_prime_factor(m * p, t));
    }
    CHECK(smallest_prime_factor_of_multiple(1, 7, t) == 7);
    CHECK(smallest_prime_factor_of_multiple(49, 7, t) == 7);
    CHECK(smallest_prime_factor_of_multiple(9, 7, t) == 3);
    CHECK_THROWS_AS(smallest_prime_factor_of_multiple(4, 7, t), InvalidInput);
    CHECK_THROWS_AS(smallest_prime_factor_of_multiple(3, 2, t), InvalidInput);
}
