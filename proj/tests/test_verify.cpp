#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gclass/output.hpp"
#include "gclass/verify.hpp"

using namespace gclass;

TEST_CASE("lemma 1 sampling passes and reproduces bit-exactly") {
    const auto a = check_lemma1(10000, 1000000, 999, 1);
    CHECK(a.passed);
    CHECK(a.checked_count == 10000);
    CHECK(a.violations.empty());
    CHECK(a.violation_total == 0);

    const auto b = check_lemma1(10000, 1000000, 999, 1);
    CHECK(a == b);
    CHECK(to_json(a).dump() == to_json(b).dump());

    const auto c = check_lemma1(2000, 1000000, 999, 99);
    CHECK(c.passed);
    CHECK(c.seed == 99);

    CHECK_THROWS_AS(check_lemma1(0, 1000000, 999, 1), InvalidInput);
}

TEST_CASE("lemma 1 anchor points agree with the scan oracle") {
    auto scan_g = [](std::uint64_t x, std::uint64_t p) {
        std::uint64_t m = 1;
        while (m * p <= x)
            m += 2;
        return m * p;
    };
    CHECK(g_of(111, 3) == scan_g(111, 3));
    CHECK(g_of(111, 3) == 117);
    CHECK(g_of(3, 3) == scan_g(3, 3));
    CHECK(g_of(3, 3) == 9);
}

TEST_CASE("lemma 2 identity holds over [3, 10^4]") {
    const auto t = build_prime_table(10000);
    const auto report = check_lemma2(3, 10000, t);
    CHECK(report.passed);
    CHECK(report.checked_count == 9998);
    CHECK(report.violation_total == 0);
}

TEST_CASE("lemma 3 holds over [3, 10^4] with exact integer comparisons") {
    const auto t = build_prime_table(10000);
    const auto report = check_lemma3(3, 10000, t);
    CHECK(report.passed);
    CHECK(report.violation_total == 0);

    // Spot anchors: n = 33 has p1 = 29, and (33-29)^2 = 16 < 65 = 2n-1;
    // n = 3 has p1 = n.
    const GRecord r33 = is_g_number(66, t);
    CHECK((33 - r33.p1) * (33 - r33.p1) < 65);
    const GRecord r3 = is_g_number(6, t);
    CHECK(r3.p1 == 3);
}

TEST_CASE("lemma 4 has no violations on either population up to 10^4") {
    const auto t = build_prime_table(10000);
    const auto report = check_lemma4(3, 10000, t);
    CHECK(report.passed);
    CHECK(report.checked_count == 9998);
    CHECK(report.violation_total == 0);
    CHECK(report.observation_total == 0);

    VerifyOptions strict;
    strict.strict_lemma4 = true;
    const auto strict_report = check_lemma4(3, 10000, t, strict);
    CHECK(strict_report.passed);
    CHECK(strict_report.observation_total == 0);

    // Anchors: n = 33 (spf(1073) = 29 = p1) and prime n (spf(n^2) = n).
    CHECK(smallest_prime_factor(1073, t) == 29);
    CHECK(smallest_prime_factor(169, t) == 13);
}

TEST_CASE("lemma 5 and theorem 1 hold over [3, 10^4]") {
    const auto t = build_prime_table(10000);
    const auto reports = check_lemma5_theorem1(3, 10000, t);
    CHECK(reports.lemma5.passed);
    CHECK(reports.lemma5.claim == Claim::L5);
    CHECK(reports.theorem1.passed);
    CHECK(reports.theorem1.claim == Claim::T1);
    CHECK(reports.theorem1.violation_total == 0);

    // The manual cases n = 4 and n = 6 run through the same machinery.
    const auto manual = check_lemma5_theorem1(4, 6, t);
    CHECK(manual.theorem1.passed);
    CHECK(manual.theorem1.checked_count == 3); // n = 4, 5, 6 are all G

    // Anchor: k1 = 37 at n = 33 is prime.
    CHECK(is_prime(is_g_number(66, t).k1, t));
}

TEST_CASE("theorem 2 holds for every prime n up to 10^4") {
    const auto t = build_prime_table(10000);
    const auto report = check_theorem2(3, 10000, t);
    CHECK(report.passed);
    CHECK(report.checked_count == 1228); // odd primes 3..9973, i.e. pi(10^4) - 1
    CHECK(report.violation_total == 0);

    // Anchor: n = 13 gives g(144, 13) = 169 = 13^2 and 26 = 13 + 13.
    CHECK(g_of(144, 13) == 169);
    CHECK(decompose(is_g_number(26, t), t) == Decomposition{26, 13, 13});
}

TEST_CASE("goldbach oracle anchors") {
    const auto t = build_prime_table(100);
    CHECK(goldbach_oracle(66, t) == Decomposition{66, 5, 61});
    CHECK(goldbach_oracle(4, t) == Decomposition{4, 2, 2});
    CHECK(goldbach_oracle(98, t) == Decomposition{98, 19, 79});
    CHECK_THROWS_AS(goldbach_oracle(7, t), InvalidInput);
    CHECK_THROWS_AS(goldbach_oracle(2, t), InvalidInput);
}

TEST_CASE("decompositions of G numbers are genuine goldbach partitions") {
    const auto t = build_prime_table(1000);
    for (std::uint64_t n = 3; n <= 500; ++n) {
        const GRecord rec = is_g_number(2 * n, t);
        if (!rec.is_g)
            continue;
        const Decomposition dec = decompose(rec, t);
        CHECK(is_prime(dec.first, t));
        CHECK(is_prime(dec.second, t));
        CHECK(dec.first + dec.second == dec.two_n);
        CHECK(goldbach_oracle(2 * n, t).has_value());
    }
}

TEST_CASE("reports round-trip through json bit-exactly") {
    const auto t = build_prime_table(1000);
    for (const auto& report :
         {check_lemma3(3, 1000, t), check_theorem2(3, 1000, t), check_lemma1(100, 10000, 99, 5)}) {
        const std::string once = to_json(report).dump(2);
        const VerificationReport parsed = report_from_json(nlohmann::json::parse(once));
        CHECK(parsed == report);
        CHECK(to_json(parsed).dump(2) == once);
    }
}

TEST_CASE("violation lists cap while totals stay exact") {
    ReportAccumulator acc(4);
    for (std::uint64_t n = 0; n < 100; ++n) {
        acc.add_checked();
        acc.add_violation(n, "boom");
        if (n % 2 == 0)
            acc.add_observation(n, "hmm");
    }
    const auto report = std::move(acc).finish(Claim::L2, 3, 102);
    CHECK(report.violations.size() == 4);
    CHECK(report.violation_total == 100);
    CHECK(report.observations.size() == 4);
    CHECK(report.observation_total == 50);
    CHECK_FALSE(report.passed);
    CHECK(report.violations.front().n == 0);
}

TEST_CASE("accumulator merge keeps ascending order under the cap") {
    ReportAccumulator left(3), right(3);
    left.add_violation(10, "a");
    right.add_violation(20, "b");
    right.add_violation(30, "c");
    right.add_violation(40, "d");
    left.merge(std::move(right));
    const auto report = std::move(left).finish(Claim::L3, 3, 100);
    CHECK(report.violation_total == 4);
    REQUIRE(report.violations.size() == 3);
    CHECK(report.violations[0].n == 10);
    CHECK(report.violations[1].n == 20);
    CHECK(report.violations[2].n == 30);
}

TEST_CASE("range checkers are identical across worker counts") {
    const auto t = build_prime_table(4000);
    VerifyOptions serial;
    VerifyOptions parallel;
    parallel.workers = 8;
    parallel.chunk_size = 64;
    CHECK(check_lemma3(3, 4000, t, serial) == check_lemma3(3, 4000, t, parallel));
    CHECK(check_theorem2(3, 4000, t, serial) == check_theorem2(3, 4000, t, parallel));
    CHECK(check_lemma4(3, 4000, t, serial) == check_lemma4(3, 4000, t, parallel));
}

TEST_CASE("range validation") {
    const auto t = build_prime_table(100);
    CHECK_THROWS_AS(check_lemma3(2, 50, t), InvalidInput);
    CHECK_THROWS_AS(check_lemma3(50, 10, t), InvalidInput);
    CHECK_THROWS_AS(check_lemma3(3, 101, t), InvalidInput);
}
