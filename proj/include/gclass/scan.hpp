#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <vector>

#include "gclass/gcore.hpp"
#include "gclass/primes.hpp"

namespace gclass {

// Aggregate view of one scanned range of n.
struct ScanSummary {
    std::uint64_t n_lo = 0;
    std::uint64_t n_hi = 0;
    std::uint64_t total_even = 0;    // how many 2n were examined
    std::uint64_t g_count = 0;
    std::uint64_t non_g_total = 0;   // exact, even when non_g_n is capped
    std::uint64_t prime_n_count = 0;
    std::vector<std::uint64_t> non_g_n; // ascending, capped at max_non_g
    double elapsed_seconds = 0.0;       // serialized only on request

    double g_density() const {
        return total_even ? double(g_count) / double(total_even) : 0.0;
    }

    friend bool operator==(const ScanSummary&, const ScanSummary&) = default;
};

// One row of the p1 derivation table: p, g((n-1)^2, p), and its smallest
// prime factor.
struct TableRow {
    std::uint64_t p = 0;
    std::uint64_t g_val = 0;
    std::uint64_t f_val = 0;

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct ScanOptions {
    std::uint64_t chunk_size = 4096;
    unsigned workers = 1;
    std::uint64_t max_non_g = 32;  // cap on the stored non-G list
    std::uint64_t max_chunks = 0;  // 0 = run to completion; used for partial runs
    std::uint64_t checkpoint_min_span = 1'000'000; // resume markers kick in at this range size
};

using RecordSink = std::function<void(const GRecord&)>;

// Evaluates the G predicate for every n in [n_lo, n_hi], streaming records in
// ascending n to the sink (if any). Chunked and parallel per options; the
// emitted stream and summary are identical for any chunking or worker count.
ScanSummary scan_range(std::uint64_t n_lo, std::uint64_t n_hi, const PrimeTable& table,
                       const ScanOptions& opts = {}, const RecordSink& sink = {});

// One row per odd prime p <= n, ascending. The maximal f_val is p1(n).
std::vector<TableRow> p1_table(std::uint64_t n, const PrimeTable& table);

struct CsvScanOutcome {
    ScanSummary summary;
    bool completed = true; // false when max_chunks stopped the run early
    bool resumed = false;  // picked up from a resume marker
};

// Streams the scan to a CSV file. Ranges of at least checkpoint_min_span
// write a `<path>.resume` marker after every chunk; a later call with the
// same parameters revalidates the last completed chunk and continues.
// Short ranges write through a temporary file instead, so an interrupted run
// leaves no partial output behind.
CsvScanOutcome scan_range_to_csv(const std::filesystem::path& path, std::uint64_t n_lo,
                                 std::uint64_t n_hi, const PrimeTable& table,
                                 const ScanOptions& opts = {});

} // namespace gclass
