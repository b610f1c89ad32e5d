#include "superschur/cli/report.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace superschur::cli {

namespace {

constexpr std::array<const char*, 5> kStatusNames = {"pass", "fail", "recorded", "skipped", "n/a"};
constexpr std::array<const char*, 5> kCheckOrder = {"dims", "verify-ring", "schur-weyl", "semisimple",
                                                    "bipartitions"};

std::size_t check_rank(const std::string& name) {
  const auto it = std::find(kCheckOrder.begin(), kCheckOrder.end(), name);
  return static_cast<std::size_t>(it - kCheckOrder.begin());
}

std::string scalar_text(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

const char* to_string(Status s) { return kStatusNames[static_cast<std::size_t>(s)]; }

Status parse_status(const std::string& text) {
  for (std::size_t i = 0; i < kStatusNames.size(); ++i)
    if (text == kStatusNames[i]) return static_cast<Status>(i);
  throw std::invalid_argument("unknown status '" + text + "'");
}

nlohmann::json to_json(const ReportEntry& e) {
  return {
      {"check", e.check},
      {"m", e.point.m},
      {"n", e.point.n},
      {"r", e.point.r},
      {"s", e.point.s},
      {"status", to_string(e.status)},
      {"ref", e.ref},
      {"values", e.values},
      {"note", e.note},
      {"time", e.seconds},
  };
}

ReportEntry entry_from_json(const nlohmann::json& j) {
  try {
    ReportEntry e;
    e.check = j.at("check").get<std::string>();
    e.point = {j.at("m").get<unsigned>(), j.at("n").get<unsigned>(), j.at("r").get<unsigned>(),
               j.at("s").get<unsigned>()};
    e.status = parse_status(j.at("status").get<std::string>());
    e.ref = j.at("ref").get<std::string>();
    e.values = j.at("values");
    if (!e.values.is_object()) throw std::invalid_argument("values must be an object");
    e.note = j.value("note", "");
    e.seconds = j.value("time", 0.0);
    return e;
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("malformed report entry: ") + ex.what());
  }
}

void sort_canonical(std::vector<ReportEntry>& entries) {
  std::stable_sort(entries.begin(), entries.end(), [](const ReportEntry& a, const ReportEntry& b) {
    const auto ra = check_rank(a.check);
    const auto rb = check_rank(b.check);
    if (ra != rb) return ra < rb;
    if (a.check != b.check) return a.check < b.check;
    return a.point < b.point;
  });
}

std::string to_jsonl(const std::vector<ReportEntry>& entries) {
  std::string out;
  for (const auto& e : entries) out += to_json(e).dump() + "\n";
  return out;
}

std::vector<ReportEntry> parse_jsonl(std::istream& in) {
  std::vector<ReportEntry> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& ex) {
      throw std::invalid_argument("line " + std::to_string(number) + ": " + ex.what());
    }
    out.push_back(entry_from_json(j));
  }
  return out;
}

std::string format_table(const std::vector<ReportEntry>& entries) {
  std::vector<std::array<std::string, 6>> rows;
  rows.push_back({"check", "point", "status", "time[s]", "values", "note"});
  for (const auto& e : entries) {
    std::string values;
    for (const auto& [k, v] : e.values.items()) {
      if (!values.empty()) values += " ";
      values += k + "=" + scalar_text(v);
    }
    std::ostringstream t;
    t << std::fixed << std::setprecision(3) << e.seconds;
    const std::string point = e.check == "verify-ring"
                                  ? "(" + std::to_string(e.point.m) + "|" + std::to_string(e.point.n) + ")"
                                  : to_string(e.point);
    rows.push_back({e.check, point, to_string(e.status), t.str(), values, e.note});
  }
  std::array<std::size_t, 6> width{};
  for (const auto& row : rows)
    for (std::size_t c = 0; c < 4; ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < 4; ++c) line += row[c] + std::string(width[c] - row[c].size() + 2, ' ');
    line += row[4];
    if (!row[5].empty()) line += "  # " + row[5];
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }
  return out.str();
}

std::string format_csv(const std::vector<ReportEntry>& entries) {
  std::set<std::string> keys;
  for (const auto& e : entries)
    for (const auto& [k, v] : e.values.items()) keys.insert(k);
  std::ostringstream out;
  out << "check,m,n,r,s,status";
  for (const auto& k : keys) out << "," << csv_field(k);
  out << ",time,note\n";
  for (const auto& e : entries) {
    out << e.check << "," << e.point.m << "," << e.point.n << "," << e.point.r << "," << e.point.s << ","
        << to_string(e.status);
    for (const auto& k : keys) {
      out << ",";
      if (e.values.contains(k)) out << csv_field(scalar_text(e.values.at(k)));
    }
    out << "," << e.seconds << "," << csv_field(e.note) << "\n";
  }
  return out.str();
}

int exit_code(const std::vector<ReportEntry>& entries, bool strict) {
  const auto has = [&](Status s) {
    return std::any_of(entries.begin(), entries.end(), [&](const ReportEntry& e) { return e.status == s; });
  };
  if (has(Status::fail)) return 1;
  if (strict && has(Status::skipped)) return 3;
  return 0;
}

}  // namespace superschur::cli
