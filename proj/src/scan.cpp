#include "gclass/scan.hpp"

#include <chrono>
#include <fstream>

#include "gclass/output.hpp"
#include "gclass/parallel.hpp"

namespace gclass {

namespace {

namespace fs = std::filesystem;

struct Counters {
    std::uint64_t processed = 0;
    std::uint64_t g_count = 0;
    std::uint64_t non_g_total = 0;
    std::uint64_t prime_n_count = 0;
    std::vector<std::uint64_t> non_g; // ascending, capped
};

struct ScanChunk {
    std::uint64_t first_n = 0;
    std::uint64_t last_n = 0;
    std::vector<GRecord> records;
    Counters counters;
};

void merge_counters(Counters& into, const Counters& from, std::uint64_t cap) {
    into.processed += from.processed;
    into.g_count += from.g_count;
    into.non_g_total += from.non_g_total;
    into.prime_n_count += from.prime_n_count;
    for (std::uint64_t n : from.non_g) {
        if (into.non_g.size() >= cap)
            break;
        into.non_g.push_back(n);
    }
}

ScanChunk scan_chunk(std::uint64_t a, std::uint64_t b, const PrimeTable& table,
                     std::uint64_t max_non_g) {
    ScanChunk chunk;
    chunk.first_n = a;
    chunk.last_n = b;
    chunk.records.reserve(b - a + 1);
    for (std::uint64_t n = a; n <= b; ++n) {
        GRecord rec = is_g_number(2 * n, table);
        ++chunk.counters.processed;
        if (rec.is_g) {
            ++chunk.counters.g_count;
        } else {
            ++chunk.counters.non_g_total;
            if (chunk.counters.non_g.size() < max_non_g)
                chunk.counters.non_g.push_back(n);
        }
        if (table.contains(n))
            ++chunk.counters.prime_n_count;
        chunk.records.push_back(rec);
    }
    return chunk;
}

void validate_scan_range(std::uint64_t n_lo, std::uint64_t n_hi, const PrimeTable& table) {
    if (n_lo < 3 || n_lo > n_hi)
        throw InvalidInput("scan requires 3 <= n_lo <= n_hi, got [" + std::to_string(n_lo) +
                           ", " + std::to_string(n_hi) + "]");
    if (n_hi > table.limit())
        throw InvalidInput("scan end " + std::to_string(n_hi) + " beyond table limit " +
                           std::to_string(table.limit()));
}

ScanSummary summary_from_counters(std::uint64_t n_lo, std::uint64_t n_hi, Counters&& c,
                                  double elapsed) {
    ScanSummary s;
    s.n_lo = n_lo;
    s.n_hi = n_hi;
    s.total_even = c.processed;
    s.g_count = c.g_count;
    s.non_g_total = c.non_g_total;
    s.prime_n_count = c.prime_n_count;
    s.non_g_n = std::move(c.non_g);
    s.elapsed_seconds = elapsed;
    if (s.g_count + s.non_g_total != s.total_even)
        throw InternalError("scan summary arithmetic broken: " + std::to_string(s.g_count) +
                            " + " + std::to_string(s.non_g_total) +
                            " != " + std::to_string(s.total_even));
    return s;
}

std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::string chunk_rows_csv(const ScanChunk& chunk) {
    std::string rows;
    rows.reserve(chunk.records.size() * 40);
    for (const GRecord& rec : chunk.records)
        rows += record_csv_row(rec);
    return rows;
}

nlohmann::json marker_json(std::uint64_t n_lo, std::uint64_t n_hi, const ScanOptions& opts,
                           std::uint64_t next_n, std::uint64_t file_bytes,
                           std::uint64_t last_chunk_first_n, std::uint64_t last_chunk_byte_begin,
                           std::uint64_t last_chunk_hash, const Counters& c) {
    nlohmann::json payload{
        {"n_lo", json_int(n_lo)},
        {"n_hi", json_int(n_hi)},
        {"chunk_size", json_int(opts.chunk_size)},
        {"max_non_g", json_int(opts.max_non_g)},
        {"next_n", json_int(next_n)},
        {"file_bytes", json_int(file_bytes)},
        {"last_chunk_first_n", json_int(last_chunk_first_n)},
        {"last_chunk_byte_begin", json_int(last_chunk_byte_begin)},
        {"last_chunk_hash", hex64(last_chunk_hash)},
    };
    nlohmann::json summary{
        {"processed", json_int(c.processed)},   {"g_count", json_int(c.g_count)},
        {"non_g_total", json_int(c.non_g_total)}, {"prime_n_count", json_int(c.prime_n_count)},
    };
    nlohmann::json non_g = nlohmann::json::array();
    for (std::uint64_t n : c.non_g)
        non_g.push_back(json_int(n));
    summary["non_g_n"] = std::move(non_g);
    payload["summary"] = std::move(summary);
    return nlohmann::json{{"schema_version", 1}, {"kind", "resume"}, {"payload", payload}};
}

std::string read_file_slice(const fs::path& path, std::uint64_t begin, std::uint64_t end) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path.string() + " for resume validation");
    in.seekg(static_cast<std::streamoff>(begin));
    std::string bytes(end - begin, '\0');
    in.read(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (static_cast<std::uint64_t>(in.gcount()) != bytes.size())
        throw IoError("short read from " + path.string() + " during resume validation");
    return bytes;
}

} // namespace

ScanSummary scan_range(std::uint64_t n_lo, std::uint64_t n_hi, const PrimeTable& table,
                       const ScanOptions& opts, const RecordSink& sink) {
    validate_scan_range(n_lo, n_hi, table);
    const auto t0 = std::chrono::steady_clock::now();

    Counters total;
    chunked_parallel<ScanChunk>(
        n_lo, n_hi, opts.chunk_size, opts.workers, opts.max_chunks,
        [&](std::uint64_t a, std::uint64_t b) { return scan_chunk(a, b, table, opts.max_non_g); },
        [&](ScanChunk&& chunk) {
            merge_counters(total, chunk.counters, opts.max_non_g);
            if (sink)
                for (const GRecord& rec : chunk.records)
                    sink(rec);
        });

    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return summary_from_counters(n_lo, n_hi, std::move(total), elapsed);
}

std::vector<TableRow> p1_table(std::uint64_t n, const PrimeTable& table) {
    if (n < 3)
        throw InvalidInput("p1 table requires n >= 3, got " + std::to_string(n));
    if (n > table.limit())
        throw InvalidInput("p1 table for n = " + std::to_string(n) + " beyond table limit " +
                           std::to_string(table.limit()));
    const std::uint64_t x = (n - 1) * (n - 1);
    std::vector<TableRow> rows;
    for (std::uint64_t p : table.primes()) {
        if (p > n)
            break;
        if (p == 2)
            continue;
        const std::uint64_t g = g_of(x, p);
        rows.push_back({p, g, smallest_prime_factor_of_multiple(g / p, p, table)});
    }
    return rows;
}

CsvScanOutcome scan_range_to_csv(const fs::path& path, std::uint64_t n_lo, std::uint64_t n_hi,
                                 const PrimeTable& table, const ScanOptions& opts) {
    validate_scan_range(n_lo, n_hi, table);
    const auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };

    fs::path marker = path;
    marker += ".resume";
    const bool checkpointing = n_hi - n_lo + 1 >= opts.checkpoint_min_span;

    if (!checkpointing) {
        if (fs::exists(marker))
            throw IoError("resume marker " + marker.string() +
                          " exists but this scan is below the checkpoint threshold; remove it");
        std::string body = records_csv_header();
        Counters total;
        const std::uint64_t consumed = chunked_parallel<ScanChunk>(
            n_lo, n_hi, opts.chunk_size, opts.workers, opts.max_chunks,
            [&](std::uint64_t a, std::uint64_t b) {
                return scan_chunk(a, b, table, opts.max_non_g);
            },
            [&](ScanChunk&& chunk) {
                merge_counters(total, chunk.counters, opts.max_non_g);
                body += chunk_rows_csv(chunk);
            });
        write_text_file(path, body);
        return {summary_from_counters(n_lo, n_hi, std::move(total), elapsed()), consumed > n_hi,
                false};
    }

    Counters total;
    std::uint64_t start_n = n_lo;
    std::uint64_t file_bytes = 0;
    bool resumed = false;

    if (fs::exists(marker)) {
        nlohmann::json doc;
        try {
            std::ifstream in(marker);
            in >> doc;
        } catch (const std::exception& e) {
            throw IoError("unreadable resume marker " + marker.string() + ": " + e.what());
        }
        if (doc.value("schema_version", 0) != 1 || doc.value("kind", "") != "resume")
            throw IoError("unrecognized resume marker " + marker.string());
        const auto& p = doc.at("payload");
        if (json_to_u64(p.at("n_lo")) != n_lo || json_to_u64(p.at("n_hi")) != n_hi ||
            json_to_u64(p.at("chunk_size")) != opts.chunk_size ||
            json_to_u64(p.at("max_non_g")) != opts.max_non_g)
            throw IoError("resume marker " + marker.string() +
                          " was written with different scan parameters; remove it to restart");

        const std::uint64_t next_n = json_to_u64(p.at("next_n"));
        file_bytes = json_to_u64(p.at("file_bytes"));
        const std::uint64_t chunk_first = json_to_u64(p.at("last_chunk_first_n"));
        const std::uint64_t chunk_begin = json_to_u64(p.at("last_chunk_byte_begin"));
        if (!fs::exists(path) || fs::file_size(path) < file_bytes)
            throw IoError("output file " + path.string() + " shorter than its resume marker");

        // Revalidate the last completed chunk: the stored hash guards the
        // file bytes, the recomputation guards table/parameter drift.
        const std::string slice = read_file_slice(path, chunk_begin, file_bytes);
        if (hex64(fnv1a(slice)) != p.at("last_chunk_hash").get<std::string>())
            throw IoError("resume marker hash mismatch for " + path.string());
        const ScanChunk redo = scan_chunk(chunk_first, next_n - 1, table, opts.max_non_g);
        if (chunk_rows_csv(redo) != slice)
            throw IoError("recomputed chunk differs from " + path.string() +
                          "; refusing to resume");

        const auto& s = p.at("summary");
        total.processed = json_to_u64(s.at("processed"));
        total.g_count = json_to_u64(s.at("g_count"));
        total.non_g_total = json_to_u64(s.at("non_g_total"));
        total.prime_n_count = json_to_u64(s.at("prime_n_count"));
        for (const auto& item : s.at("non_g_n"))
            total.non_g.push_back(json_to_u64(item));

        fs::resize_file(path, file_bytes); // drop any partial tail
        start_n = next_n;
        resumed = true;

        if (start_n > n_hi) {
            fs::remove(marker);
            return {summary_from_counters(n_lo, n_hi, std::move(total), elapsed()), true, true};
        }
    } else {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out)
            throw IoError("cannot open " + path.string() + " for writing");
        const std::string header = records_csv_header();
        out << header;
        out.flush();
        if (!out)
            throw IoError("write failure on " + path.string());
        file_bytes = header.size();
    }

    std::ofstream out(path, std::ios::binary | std::ios::app);
    if (!out)
        throw IoError("cannot open " + path.string() + " for appending");

    const std::uint64_t consumed_to = chunked_parallel<ScanChunk>(
        start_n, n_hi, opts.chunk_size, opts.workers, opts.max_chunks,
        [&](std::uint64_t a, std::uint64_t b) { return scan_chunk(a, b, table, opts.max_non_g); },
        [&](ScanChunk&& chunk) {
            const std::string rows = chunk_rows_csv(chunk);
            out.write(rows.data(), static_cast<std::streamsize>(rows.size()));
            out.flush();
            if (!out)
                throw IoError("write failure on " + path.string());
            merge_counters(total, chunk.counters, opts.max_non_g);
            const std::uint64_t new_bytes = file_bytes + rows.size();
            const auto m = marker_json(n_lo, n_hi, opts, chunk.last_n + 1, new_bytes,
                                       chunk.first_n, file_bytes, fnv1a(rows), total);
            write_text_file(marker, m.dump(2) + "\n");
            file_bytes = new_bytes;
        });

    const bool completed = consumed_to > n_hi;
    if (completed)
        fs::remove(marker);
    return {summary_from_counters(n_lo, n_hi, std::move(total), elapsed()), completed, resumed};
}

} // namespace gclass
