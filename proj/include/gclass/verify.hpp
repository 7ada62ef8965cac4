#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gclass/gcore.hpp"
#include "gclass/primes.hpp"

namespace gclass {

enum class Claim { L1, L2, L3, L4, L5, T1, T2 };

std::string_view to_string(Claim claim);
std::optional<Claim> claim_from_string(std::string_view text);

struct Violation {
    std::uint64_t n = 0;
    std::string detail;

    friend bool operator==(const Violation&, const Violation&) = default;
};

// Outcome of one empirical check over a range. `violations` fails the claim
// and is capped; `violation_total` stays exact. `observations` records
// findings that do not fail the claim (see check_lemma4).
struct VerificationReport {
    Claim claim{};
    std::uint64_t n_lo = 0;
    std::uint64_t n_hi = 0;
    std::uint64_t seed = 0; // meaningful for L1 only
    std::uint64_t checked_count = 0;
    std::uint64_t violation_total = 0;
    std::uint64_t observation_total = 0;
    std::vector<Violation> violations;
    std::vector<Violation> observations;
    bool passed = true;

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct VerifyOptions {
    std::uint64_t max_violations = 32; // cap on stored entries; totals stay exact
    std::uint64_t chunk_size = 4096;
    unsigned workers = 1;
    bool strict_lemma4 = false; // fail lemma 4 on non-G violations too
};

// Capped violation collector with an associative merge, so chunked checkers
// can combine partial results in ascending-chunk order.
class ReportAccumulator {
public:
    explicit ReportAccumulator(std::uint64_t cap) : cap_(cap) {}

    void add_checked(std::uint64_t k = 1) { checked_ += k; }
    void add_violation(std::uint64_t n, std::string detail);
    void add_observation(std::uint64_t n, std::string detail);
    void merge(ReportAccumulator&& other);
    VerificationReport finish(Claim claim, std::uint64_t n_lo, std::uint64_t n_hi,
                              std::uint64_t seed = 0) &&;

private:
    std::uint64_t cap_;
    std::uint64_t checked_ = 0;
    std::uint64_t violation_total_ = 0;
    std::uint64_t observation_total_ = 0;
    std::vector<Violation> violations_;
    std::vector<Violation> observations_;
};

// Seeded random comparison of g(x, p) against a linear scan over odd
// multiples: sample_count pairs with x in [2, x_bound] and odd p <= p_bound.
VerificationReport check_lemma1(std::uint64_t sample_count, std::uint64_t x_bound,
                                std::uint64_t p_bound, std::uint64_t seed,
                                const VerifyOptions& opts = {});

// Decomposition identity: p1 + k1 == 2n exactly when 2n is a G number.
VerificationReport check_lemma2(std::uint64_t n_lo, std::uint64_t n_hi, const PrimeTable& table,
                                const VerifyOptions& opts = {});

// For G numbers: (n - p1)^2 < 2n - 1, and for n > 7 also p1^3 > n^2.
// All comparisons in exact integer arithmetic.
VerificationReport check_lemma3(std::uint64_t n_lo, std::uint64_t n_hi, const PrimeTable& table,
                                const VerifyOptions& opts = {});

// smallest_prime_factor(g((n-1)^2, p1)) == p1, checked for every n. By
// default only violations at G numbers fail the claim; violations at non-G
// numbers are reported as observations (strict_lemma4 promotes them).
VerificationReport check_lemma4(std::uint64_t n_lo, std::uint64_t n_hi, const PrimeTable& table,
                                const VerifyOptions& opts = {});

struct Lemma5Theorem1Reports {
    VerificationReport lemma5;   // k1 prime for G numbers with n > 7, plus the
                                 // inequality chain p1^3 > n^2 (>= g, strict for p1 < n)
    VerificationReport theorem1; // p1, k1 both prime and p1 + k1 = 2n for every
                                 // G number, including the manual cases n = 4, 6
};

// One pass over the range feeding both reports.
Lemma5Theorem1Reports check_lemma5_theorem1(std::uint64_t n_lo, std::uint64_t n_hi,
                                            const PrimeTable& table,
                                            const VerifyOptions& opts = {});

// For every prime n in range: g((n-1)^2, n) = n^2, p1 = n, 2n is a G number
// and decomposes as (n, n).
VerificationReport check_theorem2(std::uint64_t n_lo, std::uint64_t n_hi, const PrimeTable& table,
                                  const VerifyOptions& opts = {});

// Brute-force Goldbach partition: smallest prime q with 2n - q prime.
// Independent of the G machinery; empty only on a genuine counterexample.
std::optional<Decomposition> goldbach_oracle(std::uint64_t two_n, const PrimeTable& table);

} // namespace gclass
