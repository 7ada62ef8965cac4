// gclass: G-number toolkit command line.
//
// Exit codes: 0 success (and "is a G number" for `check`), 1 usage or
// validation error, 2 `check` target is not a G number, 3 I/O error,
// 4 verification failure or theorem counterexample.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gclass/gcore.hpp"
#include "gclass/output.hpp"
#include "gclass/primes.hpp"
#include "gclass/scan.hpp"
#include "gclass/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotG = 2;
constexpr int kExitIo = 3;
constexpr int kExitVerifyFail = 4;

// JSON exports materialize records in memory; past this many rows the CSV
// streaming path is the only sane one.
constexpr std::uint64_t kJsonRecordExportMax = 100000;

std::uint64_t table_cap() {
    const char* env = std::getenv("GCLASS_TABLE_LIMIT");
    if (!env)
        return gclass::kDefaultTableLimitCap;
    try {
        return std::stoull(env);
    } catch (const std::exception&) {
        throw gclass::InvalidInput(std::string("GCLASS_TABLE_LIMIT is not a number: ") + env);
    }
}

gclass::PrimeTable table_for(std::uint64_t n) {
    return gclass::build_prime_table(std::max<std::uint64_t>(n, 3), table_cap());
}

gclass::OutputFormat parse_format(const std::string& text) {
    auto fmt = gclass::format_from_string(text);
    if (!fmt)
        throw gclass::InvalidInput("unknown format: " + text);
    return *fmt;
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty())
        std::cout << content;
    else
        gclass::write_text_file(out_path, content);
}

int cmd_check(std::uint64_t two_n, const std::string& format_name, const std::string& out_path) {
    const auto format = parse_format(format_name);
    if (two_n == 4) {
        // Below the predicate's domain; reported as the classic 2 + 2.
        switch (format) {
        case gclass::OutputFormat::Text:
            emit("4 = 2 + 2 (below the G-number domain, handled as a special case)\n", out_path);
            break;
        case gclass::OutputFormat::Json: {
            nlohmann::json doc{
                {"schema_version", 1},
                {"kind", "record"},
                {"payload",
                 {{"record", nullptr},
                  {"decomposition", gclass::to_json(gclass::Decomposition{4, 2, 2})},
                  {"special_case", true}}}};
            emit(doc.dump(2) + "\n", out_path);
            break;
        }
        case gclass::OutputFormat::Csv:
            emit(gclass::records_csv_header(), out_path);
            break;
        }
        return kExitOk;
    }

    const auto table = table_for(two_n / 2);
    const gclass::GRecord rec = gclass::is_g_number(two_n, table);
    std::optional<gclass::Decomposition> dec;
    if (rec.is_g)
        dec = gclass::decompose(rec, table);

    switch (format) {
    case gclass::OutputFormat::Text:
        emit(gclass::render_record_text(rec, dec ? &*dec : nullptr), out_path);
        break;
    case gclass::OutputFormat::Json:
        emit(gclass::record_document(rec, dec).dump(2) + "\n", out_path);
        break;
    case gclass::OutputFormat::Csv:
        emit(gclass::records_csv({&rec, 1}), out_path);
        break;
    }
    return rec.is_g ? kExitOk : kExitNotG;
}

int cmd_table(std::uint64_t n, const std::string& format_name, const std::string& out_path) {
    const auto format = parse_format(format_name);
    const auto table = table_for(n);
    const auto rows = gclass::p1_table(n, table);
    const auto p1 = gclass::p1_of(n, table);

    switch (format) {
    case gclass::OutputFormat::Text:
        emit(gclass::render_table_text(n, rows, p1), out_path);
        break;
    case gclass::OutputFormat::Csv:
        emit(gclass::table_csv(rows), out_path);
        break;
    case gclass::OutputFormat::Json:
        emit(gclass::table_document(n, rows, p1).dump(2) + "\n", out_path);
        break;
    }
    return kExitOk;
}

struct RangeArgs {
    std::uint64_t from = 3;
    std::uint64_t to = 0;
    std::string format = "text";
    std::string out_path;
    std::uint64_t chunk = 4096;
    unsigned workers = 1;
    std::uint64_t max_violations = 32;
};

gclass::ScanOptions scan_options(const RangeArgs& args) {
    gclass::ScanOptions opts;
    opts.chunk_size = args.chunk;
    opts.workers = args.workers;
    opts.max_non_g = args.max_violations;
    return opts;
}

int cmd_scan(const RangeArgs& args, bool format_given) {
    auto format = parse_format(args.format);
    const auto table = table_for(args.to);
    const auto opts = scan_options(args);

    if (!args.out_path.empty()) {
        if (!format_given)
            format = gclass::OutputFormat::Csv; // record files default to csv
        switch (format) {
        case gclass::OutputFormat::Csv: {
            const auto outcome = gclass::scan_range_to_csv(args.out_path, args.from, args.to,
                                                           table, opts);
            std::cout << gclass::render_summary_text(outcome.summary);
            return kExitOk;
        }
        case gclass::OutputFormat::Json: {
            if (args.to - args.from + 1 > kJsonRecordExportMax)
                throw gclass::InvalidInput("json export is capped at " +
                                           std::to_string(kJsonRecordExportMax) +
                                           " records; use --format csv for large scans");
            std::vector<gclass::GRecord> records;
            records.reserve(args.to - args.from + 1);
            const auto summary = gclass::scan_range(args.from, args.to, table, opts,
                                                    [&](const gclass::GRecord& rec) {
                                                        records.push_back(rec);
                                                    });
            gclass::write_results(records, summary, args.out_path, gclass::OutputFormat::Json);
            std::cout << gclass::render_summary_text(summary);
            return kExitOk;
        }
        case gclass::OutputFormat::Text:
            throw gclass::InvalidInput("--out requires --format csv or json");
        }
    }

    switch (format) {
    case gclass::OutputFormat::Text: {
        const auto summary = gclass::scan_range(args.from, args.to, table, opts);
        std::cout << gclass::render_summary_text(summary);
        break;
    }
    case gclass::OutputFormat::Csv: {
        std::cout << gclass::records_csv_header();
        gclass::scan_range(args.from, args.to, table, opts, [](const gclass::GRecord& rec) {
            std::cout << gclass::record_csv_row(rec);
        });
        break;
    }
    case gclass::OutputFormat::Json: {
        if (args.to - args.from + 1 > kJsonRecordExportMax)
            throw gclass::InvalidInput("json export is capped at " +
                                       std::to_string(kJsonRecordExportMax) +
                                       " records; use --format csv for large scans");
        std::vector<gclass::GRecord> records;
        const auto summary = gclass::scan_range(args.from, args.to, table, opts,
                                                [&](const gclass::GRecord& rec) {
                                                    records.push_back(rec);
                                                });
        std::cout << gclass::scan_document(summary, records).dump(2) << "\n";
        break;
    }
    }
    return kExitOk;
}

int cmd_density(const RangeArgs& args) {
    const auto format = parse_format(args.format);
    const auto table = table_for(args.to);
    const auto summary = gclass::scan_range(args.from, args.to, table, scan_options(args));

    switch (format) {
    case gclass::OutputFormat::Text: {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f\n", summary.g_density());
        emit(buf, args.out_path);
        break;
    }
    case gclass::OutputFormat::Json:
        emit(gclass::to_json(summary).dump(2) + "\n", args.out_path);
        break;
    case gclass::OutputFormat::Csv:
        emit(gclass::summary_csv(summary), args.out_path);
        break;
    }
    return kExitOk;
}

int cmd_verify(const RangeArgs& args, const std::vector<std::string>& claim_names,
               std::uint64_t seed, bool strict_lemma4) {
    const auto format = parse_format(args.format);

    bool wanted[7] = {};
    if (claim_names.empty()) {
        for (bool& w : wanted)
            w = true;
    }
    for (const std::string& name : claim_names) {
        const auto claim = gclass::claim_from_string(name);
        if (!claim)
            throw gclass::InvalidInput("unknown claim: " + name +
                                       " (expected L1,L2,L3,L4,L5,T1,T2)");
        wanted[static_cast<int>(*claim)] = true;
    }

    gclass::VerifyOptions opts;
    opts.max_violations = args.max_violations;
    opts.chunk_size = args.chunk;
    opts.workers = args.workers;
    opts.strict_lemma4 = strict_lemma4;

    const bool needs_range =
        wanted[1] || wanted[2] || wanted[3] || wanted[4] || wanted[5] || wanted[6];
    std::optional<gclass::PrimeTable> table;
    if (needs_range)
        table = table_for(args.to);

    std::vector<gclass::VerificationReport> reports;
    using gclass::Claim;
    if (wanted[static_cast<int>(Claim::L1)])
        reports.push_back(gclass::check_lemma1(10000, 1000000, 999, seed, opts));
    if (wanted[static_cast<int>(Claim::L2)])
        reports.push_back(gclass::check_lemma2(args.from, args.to, *table, opts));
    if (wanted[static_cast<int>(Claim::L3)])
        reports.push_back(gclass::check_lemma3(args.from, args.to, *table, opts));
    if (wanted[static_cast<int>(Claim::L4)])
        reports.push_back(gclass::check_lemma4(args.from, args.to, *table, opts));
    if (wanted[static_cast<int>(Claim::L5)] || wanted[static_cast<int>(Claim::T1)]) {
        auto pair = gclass::check_lemma5_theorem1(args.from, args.to, *table, opts);
        if (wanted[static_cast<int>(Claim::L5)])
            reports.push_back(std::move(pair.lemma5));
        if (wanted[static_cast<int>(Claim::T1)])
            reports.push_back(std::move(pair.theorem1));
    }
    if (wanted[static_cast<int>(Claim::T2)])
        reports.push_back(gclass::check_theorem2(args.from, args.to, *table, opts));

    switch (format) {
    case gclass::OutputFormat::Text: {
        std::string text;
        for (const auto& report : reports)
            text += gclass::render_report_text(report);
        std::cout << text;
        break;
    }
    case gclass::OutputFormat::Json:
        std::cout << gclass::report_document(reports).dump(2) << "\n";
        break;
    case gclass::OutputFormat::Csv:
        std::cout << gclass::reports_csv(reports);
        break;
    }
    if (!args.out_path.empty())
        gclass::write_results(std::span<const gclass::VerificationReport>(reports), args.out_path,
                              format == gclass::OutputFormat::Csv ? gclass::OutputFormat::Csv
                                                                  : gclass::OutputFormat::Json);

    for (const auto& report : reports)
        if (!report.passed)
            return kExitVerifyFail;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"G-number toolkit: membership checks, p1 derivation tables, range scans, and "
                 "empirical verification of the defining identities"};
    app.require_subcommand(1);

    int rc = kExitOk;

    // check
    std::uint64_t check_two_n = 0;
    std::string check_format = "text";
    std::string check_out;
    auto* check = app.add_subcommand("check", "Classify one even number 2n");
    check->add_option("two_n", check_two_n, "even number to classify (>= 4)")->required();
    check->add_option("--format", check_format, "text, csv, or json");
    check->add_option("--out", check_out, "write output to a file instead of stdout");
    check->callback([&] {
        if (check_two_n % 2 != 0 || check_two_n < 4)
            throw gclass::InvalidInput("check requires an even number >= 4, got " +
                                       std::to_string(check_two_n));
        rc = cmd_check(check_two_n, check_format, check_out);
    });

    // table
    std::uint64_t table_n = 0;
    std::string table_format = "text";
    std::string table_out;
    auto* table = app.add_subcommand("table", "Show the p1 derivation table for one n");
    table->add_option("n", table_n, "n >= 3")->required();
    table->add_option("--format", table_format, "text, csv, or json");
    table->add_option("--out", table_out, "write output to a file instead of stdout");
    table->callback([&] { rc = cmd_table(table_n, table_format, table_out); });

    // shared range options
    auto add_range_options = [](CLI::App* cmd, RangeArgs& args, bool with_out) {
        cmd->add_option("--from", args.from, "first n (default 3)");
        cmd->add_option("--to", args.to, "last n")->required();
        cmd->add_option("--format", args.format, "text, csv, or json");
        if (with_out)
            cmd->add_option("--out", args.out_path, "write results to this file");
        cmd->add_option("--chunk", args.chunk, "chunk size for range processing");
        cmd->add_option("--workers", args.workers, "worker threads")
            ->check(CLI::Range(1u, 1024u));
        cmd->add_option("--max-violations", args.max_violations,
                        "cap on stored counterexample/non-G entries");
    };

    // scan
    RangeArgs scan_args;
    auto* scan = app.add_subcommand("scan", "Scan a range of n and report G membership");
    add_range_options(scan, scan_args, true);
    scan->callback([&] { rc = cmd_scan(scan_args, scan->count("--format") > 0); });

    // density
    RangeArgs density_args;
    auto* density = app.add_subcommand("density", "Measured fraction of G numbers in a range");
    add_range_options(density, density_args, false);
    density->callback([&] { rc = cmd_density(density_args); });

    // verify
    RangeArgs verify_args;
    std::vector<std::string> verify_claims;
    std::uint64_t verify_seed = 1;
    bool strict_lemma4 = false;
    auto* verify = app.add_subcommand("verify", "Run the empirical claim checkers");
    add_range_options(verify, verify_args, true);
    verify->add_option("--claims", verify_claims, "subset of L1,L2,L3,L4,L5,T1,T2 (default all)")
        ->delimiter(',');
    verify->add_option("--seed", verify_seed, "seed for the randomized L1 check");
    verify->add_flag("--strict-lemma4", strict_lemma4,
                     "fail lemma 4 on non-G violations as well");
    verify->callback(
        [&] { rc = cmd_verify(verify_args, verify_claims, verify_seed, strict_lemma4); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const gclass::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const gclass::TheoremViolation& e) {
        std::cerr << "THEOREM VIOLATION: " << e.what() << "\n";
        return kExitVerifyFail;
    } catch (const gclass::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return rc;
}
