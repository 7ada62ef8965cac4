#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "gclass/gcore.hpp"
#include "gclass/scan.hpp"
#include "gclass/verify.hpp"

namespace gclass {

enum class OutputFormat { Text, Csv, Json };

std::optional<OutputFormat> format_from_string(std::string_view text);

// JSON integers are exact only up to 2^53; larger values are emitted as
// decimal strings.
inline constexpr std::uint64_t kJsonExactIntegerMax = std::uint64_t{1} << 53;

nlohmann::json json_int(std::uint64_t v);
std::uint64_t json_to_u64(const nlohmann::json& j); // accepts number or decimal string

nlohmann::json to_json(const GRecord& rec);
nlohmann::json to_json(const Decomposition& dec);
nlohmann::json to_json(const ScanSummary& summary, bool with_timings = false);
nlohmann::json to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& j);

// Top-level documents: {"schema_version": 1, "kind": ..., "payload": ...}.
nlohmann::json scan_document(const ScanSummary& summary, std::span<const GRecord> records,
                             bool with_timings = false);
nlohmann::json report_document(std::span<const VerificationReport> reports);
nlohmann::json record_document(const GRecord& rec, const std::optional<Decomposition>& dec);
nlohmann::json table_document(std::uint64_t n, std::span<const TableRow> rows,
                              const P1Result& p1);

// CSV: comma-separated, header row, LF endings, no quoting (all fields are
// numeric or boolean).
std::string records_csv_header();
std::string record_csv_row(const GRecord& rec);
std::string records_csv(std::span<const GRecord> records);
std::string summary_csv(const ScanSummary& summary);
std::string reports_csv(std::span<const VerificationReport> reports);
std::string table_csv(std::span<const TableRow> rows);

// Human-readable renderings used by the CLI.
std::string render_record_text(const GRecord& rec, const Decomposition* dec);
std::string render_table_text(std::uint64_t n, std::span<const TableRow> rows,
                              const P1Result& p1);
std::string render_summary_text(const ScanSummary& summary, bool with_timings = false);
std::string render_report_text(const VerificationReport& report);

// Writes content through a temporary sibling file, then renames it into
// place; failures throw IoError with the path and leave no partial file.
void write_text_file(const std::filesystem::path& path, std::string_view content);

void write_results(std::span<const GRecord> records, const ScanSummary& summary,
                   const std::filesystem::path& path, OutputFormat format);
void write_results(std::span<const VerificationReport> reports,
                   const std::filesystem::path& path, OutputFormat format);

} // namespace gclass
