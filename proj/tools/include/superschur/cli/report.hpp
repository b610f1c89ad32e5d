#pragma once

// Verification reports: one entry per grid point and check, serialized as
// JSON lines, an aligned text table, or CSV.

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "superschur/cli/config.hpp"

namespace superschur::cli {

enum class Status {
  pass,
  fail,
  recorded,        // values only; the claim does not apply at this point
  skipped,         // resource guard
  not_applicable,  // precondition of the check not met
};

const char* to_string(Status s);
Status parse_status(const std::string& text);

struct ReportEntry {
  std::string check;
  GridPoint point;  // r = s = 0 for ring checks
  Status status = Status::pass;
  std::string ref;  // the statement being checked
  nlohmann::json values = nlohmann::json::object();
  std::string note;
  double seconds = 0;

  friend bool operator==(const ReportEntry&, const ReportEntry&) = default;
};

nlohmann::json to_json(const ReportEntry& e);
/// Throws std::invalid_argument on missing or mistyped fields.
ReportEntry entry_from_json(const nlohmann::json& j);

/// Canonical order: by check (in subcommand order), then grid point.
void sort_canonical(std::vector<ReportEntry>& entries);

std::string to_jsonl(const std::vector<ReportEntry>& entries);
std::vector<ReportEntry> parse_jsonl(std::istream& in);

std::string format_table(const std::vector<ReportEntry>& entries);
/// One row per entry; value columns are the union of keys, sorted.
std::string format_csv(const std::vector<ReportEntry>& entries);

/// 1 if anything failed, else 3 if strict and a resource skip occurred, else 0.
int exit_code(const std::vector<ReportEntry>& entries, bool strict);

}  // namespace superschur::cli
