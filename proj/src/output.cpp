#include "gclass/output.hpp"

#include <cstdio>
#include <fstream>

namespace gclass {

namespace fs = std::filesystem;

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string bool_str(bool b) {
    return b ? "true" : "false";
}

nlohmann::json violations_json(const std::vector<Violation>& list) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Violation& v : list)
        arr.push_back({{"n", json_int(v.n)}, {"detail", v.detail}});
    return arr;
}

std::vector<Violation> violations_from_json(const nlohmann::json& arr) {
    std::vector<Violation> list;
    for (const auto& item : arr)
        list.push_back({json_to_u64(item.at("n")), item.at("detail").get<std::string>()});
    return list;
}

// Right-aligned column block with two-space gutters.
std::string aligned_rows(const std::vector<std::vector<std::string>>& rows,
                         const std::vector<std::string>& suffixes) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        widths.resize(std::max(widths.size(), row.size()), 0);
        for (std::size_t c = 0; c < row.size(); ++c)
            widths[c] = std::max(widths[c], row[c].size());
    }
    std::string text;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (c)
                text += "  ";
            text += std::string(widths[c] - rows[r][c].size(), ' ');
            text += rows[r][c];
        }
        if (r < suffixes.size())
            text += suffixes[r];
        text += '\n';
    }
    return text;
}

} // namespace

std::optional<OutputFormat> format_from_string(std::string_view text) {
    if (text == "text")
        return OutputFormat::Text;
    if (text == "csv")
        return OutputFormat::Csv;
    if (text == "json")
        return OutputFormat::Json;
    return std::nullopt;
}

nlohmann::json json_int(std::uint64_t v) {
    if (v > kJsonExactIntegerMax)
        return std::to_string(v);
    return v;
}

std::uint64_t json_to_u64(const nlohmann::json& j) {
    if (j.is_string())
        return std::stoull(j.get<std::string>());
    return j.get<std::uint64_t>();
}

nlohmann::json to_json(const GRecord& rec) {
    return {{"n", json_int(rec.n)},
            {"two_n", json_int(rec.two_n)},
            {"p1", json_int(rec.p1)},
            {"g_value", json_int(rec.g_value)},
            {"k1", json_int(rec.k1)},
            {"is_g", rec.is_g},
            {"witness_p", json_int(rec.witness_p)}};
}

nlohmann::json to_json(const Decomposition& dec) {
    return {{"two_n", json_int(dec.two_n)},
            {"first", json_int(dec.first)},
            {"second", json_int(dec.second)}};
}

nlohmann::json to_json(const ScanSummary& summary, bool with_timings) {
    nlohmann::json non_g = nlohmann::json::array();
    for (std::uint64_t n : summary.non_g_n)
        non_g.push_back(json_int(n));
    nlohmann::json j{{"n_lo", json_int(summary.n_lo)},
                     {"n_hi", json_int(summary.n_hi)},
                     {"total_even", json_int(summary.total_even)},
                     {"g_count", json_int(summary.g_count)},
                     {"g_density", summary.g_density()},
                     {"non_g_total", json_int(summary.non_g_total)},
                     {"non_g_n", std::move(non_g)},
                     {"prime_n_count", json_int(summary.prime_n_count)}};
    if (with_timings)
        j["elapsed_seconds"] = summary.elapsed_seconds;
    return j;
}

nlohmann::json to_json(const VerificationReport& report) {
    return {{"claim", std::string(to_string(report.claim))},
            {"n_lo", json_int(report.n_lo)},
            {"n_hi", json_int(report.n_hi)},
            {"seed", json_int(report.seed)},
            {"checked_count", json_int(report.checked_count)},
            {"violation_total", json_int(report.violation_total)},
            {"observation_total", json_int(report.observation_total)},
            {"violations", violations_json(report.violations)},
            {"observations", violations_json(report.observations)},
            {"passed", report.passed}};
}

VerificationReport report_from_json(const nlohmann::json& j) {
    VerificationReport report;
    const auto claim = claim_from_string(j.at("claim").get<std::string>());
    if (!claim)
        throw InvalidInput("unknown claim in report: " + j.at("claim").get<std::string>());
    report.claim = *claim;
    report.n_lo = json_to_u64(j.at("n_lo"));
    report.n_hi = json_to_u64(j.at("n_hi"));
    report.seed = json_to_u64(j.at("seed"));
    report.checked_count = json_to_u64(j.at("checked_count"));
    report.violation_total = json_to_u64(j.at("violation_total"));
    report.observation_total = json_to_u64(j.at("observation_total"));
    report.violations = violations_from_json(j.at("violations"));
    report.observations = violations_from_json(j.at("observations"));
    report.passed = j.at("passed").get<bool>();
    return report;
}

nlohmann::json scan_document(const ScanSummary& summary, std::span<const GRecord> records,
                             bool with_timings) {
    nlohmann::json recs = nlohmann::json::array();
    for (const GRecord& rec : records)
        recs.push_back(to_json(rec));
    return {{"schema_version", 1},
            {"kind", "scan"},
            {"payload", {{"summary", to_json(summary, with_timings)}, {"records", std::move(recs)}}}};
}

nlohmann::json report_document(std::span<const VerificationReport> reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const VerificationReport& report : reports)
        arr.push_back(to_json(report));
    return {{"schema_version", 1}, {"kind", "report"}, {"payload", {{"reports", std::move(arr)}}}};
}

nlohmann::json record_document(const GRecord& rec, const std::optional<Decomposition>& dec) {
    nlohmann::json payload{{"record", to_json(rec)}};
    payload["decomposition"] = dec ? to_json(*dec) : nlohmann::json(nullptr);
    return {{"schema_version", 1}, {"kind", "record"}, {"payload", std::move(payload)}};
}

nlohmann::json table_document(std::uint64_t n, std::span<const TableRow> rows,
                              const P1Result& p1) {
    nlohmann::json arr = nlohmann::json::array();
    for (const TableRow& row : rows)
        arr.push_back({{"p", json_int(row.p)},
                       {"g_val", json_int(row.g_val)},
                       {"f_val", json_int(row.f_val)}});
    return {{"schema_version", 1},
            {"kind", "table"},
            {"payload",
             {{"n", json_int(n)},
              {"p1", json_int(p1.p1)},
              {"witness_p", json_int(p1.witness_p)},
              {"rows", std::move(arr)}}}};
}

std::string records_csv_header() {
    return "n,two_n,p1,g_value,k1,is_g,witness_p\n";
}

std::string record_csv_row(const GRecord& rec) {
    std::string row = std::to_string(rec.n);
    row += ',';
    row += std::to_string(rec.two_n);
    row += ',';
    row += std::to_string(rec.p1);
    row += ',';
    row += std::to_string(rec.g_value);
    row += ',';
    row += std::to_string(rec.k1);
    row += ',';
    row += bool_str(rec.is_g);
    row += ',';
    row += std::to_string(rec.witness_p);
    row += '\n';
    return row;
}

std::string records_csv(std::span<const GRecord> records) {
    std::string text = records_csv_header();
    for (const GRecord& rec : records)
        text += record_csv_row(rec);
    return text;
}

std::string summary_csv(const ScanSummary& summary) {
    std::string text = "n_lo,n_hi,total_even,g_count,g_density,non_g_total,prime_n_count\n";
    text += std::to_string(summary.n_lo) + ',' + std::to_string(summary.n_hi) + ',' +
            std::to_string(summary.total_even) + ',' + std::to_string(summary.g_count) + ',' +
            fmt_double(summary.g_density()) + ',' + std::to_string(summary.non_g_total) + ',' +
            std::to_string(summary.prime_n_count) + '\n';
    return text;
}

std::string reports_csv(std::span<const VerificationReport> reports) {
    std::string text =
        "claim,n_lo,n_hi,seed,checked_count,violation_total,observation_total,passed\n";
    for (const VerificationReport& r : reports) {
        text += std::string(to_string(r.claim)) + ',' + std::to_string(r.n_lo) + ',' +
                std::to_string(r.n_hi) + ',' + std::to_string(r.seed) + ',' +
                std::to_string(r.checked_count) + ',' + std::to_string(r.violation_total) + ',' +
                std::to_string(r.observation_total) + ',' + bool_str(r.passed) + '\n';
    }
    return text;
}

std::string table_csv(std::span<const TableRow> rows) {
    std::string text = "p,g_val,f_val\n";
    for (const TableRow& row : rows)
        text += std::to_string(row.p) + ',' + std::to_string(row.g_val) + ',' +
                std::to_string(row.f_val) + '\n';
    return text;
}

std::string render_record_text(const GRecord& rec, const Decomposition* dec) {
    std::string text = aligned_rows({{"n", std::to_string(rec.n)},
                                     {"two_n", std::to_string(rec.two_n)},
                                     {"p1", std::to_string(rec.p1)},
                                     {"witness_p", std::to_string(rec.witness_p)},
                                     {"g_value", std::to_string(rec.g_value)},
                                     {"k1", std::to_string(rec.k1)},
                                     {"is_g", bool_str(rec.is_g)}},
                                    {});
    if (rec.is_g && dec)
        text += "G number: " + std::to_string(dec->two_n) + " = " + std::to_string(dec->first) +
                " + " + std::to_string(dec->second) + "\n";
    else if (!rec.is_g)
        text += "not a G number: " + std::to_string(rec.two_n) +
                " (p1 + k1 = " + std::to_string(rec.p1 + rec.k1) + ")\n";
    return text;
}

std::string render_table_text(std::uint64_t n, std::span<const TableRow> rows,
                              const P1Result& p1) {
    const std::uint64_t x = (n - 1) * (n - 1);
    std::string text = "p1 derivation for n = " + std::to_string(n) + "  ((n-1)^2 = " +
                       std::to_string(x) + ")\n";
    std::vector<std::vector<std::string>> cells{{"p", "g_val", "f_val"}};
    std::vector<std::string> suffixes{""};
    for (const TableRow& row : rows) {
        cells.push_back({std::to_string(row.p), std::to_string(row.g_val),
                         std::to_string(row.f_val)});
        suffixes.push_back(row.p == p1.witness_p ? "  <- p1" : "");
    }
    text += aligned_rows(cells, suffixes);
    text += "p1 = " + std::to_string(p1.p1) + "  (witness p = " + std::to_string(p1.witness_p) +
            ")\n";
    return text;
}

std::string render_summary_text(const ScanSummary& summary, bool with_timings) {
    std::string text = "scan [" + std::to_string(summary.n_lo) + ", " +
                       std::to_string(summary.n_hi) + "]\n";
    auto line = [&](std::string_view key, const std::string& value) {
        text += "  ";
        text += key;
        text += std::string(14 > key.size() ? 14 - key.size() : 1, ' ');
        text += value;
        text += '\n';
    };
    line("total_even", std::to_string(summary.total_even));
    line("g_count", std::to_string(summary.g_count));
    line("g_density", fmt_double(summary.g_density()));
    line("non_g_total", std::to_string(summary.non_g_total));
    std::string non_g;
    for (std::uint64_t n : summary.non_g_n) {
        if (!non_g.empty())
            non_g += ' ';
        non_g += std::to_string(n);
    }
    if (summary.non_g_total > summary.non_g_n.size())
        non_g += non_g.empty() ? "..." : " ...";
    if (summary.non_g_total == 0)
        non_g = "-";
    line("non_g_n", non_g);
    line("prime_n_count", std::to_string(summary.prime_n_count));
    if (with_timings)
        line("elapsed_s", fmt_double(summary.elapsed_seconds));
    return text;
}

std::string render_report_text(const VerificationReport& report) {
    std::string text = std::string(to_string(report.claim)) + "  [" +
                       std::to_string(report.n_lo) + ", " + std::to_string(report.n_hi) + "]" +
                       "  checked " + std::to_string(report.checked_count) + "  violations " +
                       std::to_string(report.violation_total) + "  " +
                       (report.passed ? "PASS" : "FAIL");
    if (report.observation_total > 0)
        text += "  (observations " + std::to_string(report.observation_total) + ")";
    text += '\n';
    for (const Violation& v : report.violations)
        text += "    n=" + std::to_string(v.n) + "  " + v.detail + "\n";
    if (report.violation_total > report.violations.size())
        text += "    ... " +
                std::to_string(report.violation_total - report.violations.size()) +
                " more violations\n";
    for (const Violation& v : report.observations)
        text += "    note n=" + std::to_string(v.n) + "  " + v.detail + "\n";
    if (report.observation_total > report.observations.size())
        text += "    ... " +
                std::to_string(report.observation_total - report.observations.size()) +
                " more observations\n";
    return text;
}

void write_text_file(const fs::path& path, std::string_view content) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot open " + tmp.string() + " for writing");
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw IoError("write failure on " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        std::error_code ec2;
        fs::remove(tmp, ec2);
        throw IoError("cannot move " + tmp.string() + " into place: " + ec.message());
    }
}

void write_results(std::span<const GRecord> records, const ScanSummary& summary,
                   const fs::path& path, OutputFormat format) {
    switch (format) {
    case OutputFormat::Csv:
        write_text_file(path, records_csv(records));
        return;
    case OutputFormat::Json:
        write_text_file(path, scan_document(summary, records).dump(2) + "\n");
        return;
    case OutputFormat::Text:
        break;
    }
    throw InvalidInput("write_results supports csv and json only");
}

void write_results(std::span<const VerificationReport> reports, const fs::path& path,
                   OutputFormat format) {
    switch (format) {
    case OutputFormat::Csv:
        write_text_file(path, reports_csv(reports));
        return;
    case OutputFormat::Json:
        write_text_file(path, report_document(reports).dump(2) + "\n");
        return;
    case OutputFormat::Text:
        break;
    }
    throw InvalidInput("write_results supports csv and json only");
}

} // namespace gclass
