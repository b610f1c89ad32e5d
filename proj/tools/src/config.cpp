#include "superschur/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <thread>

namespace superschur::cli {

namespace {

unsigned parse_unsigned(std::string_view text, const std::string& whole) {
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw ConfigError("bad range '" + whole + "'");
  return value;
}

}  // namespace

std::vector<unsigned> parse_range(const std::string& text) {
  std::set<unsigned> values;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view piece = rest.substr(0, comma);
    const auto dots = piece.find("..");
    if (dots == std::string_view::npos) {
      values.insert(parse_unsigned(piece, text));
    } else {
      const unsigned lo = parse_unsigned(piece.substr(0, dots), text);
      const unsigned hi = parse_unsigned(piece.substr(dots + 2), text);
      if (lo > hi) throw ConfigError("empty range '" + text + "'");
      if (hi - lo > 64) throw ConfigError("range too long '" + text + "'");
      for (unsigned v = lo; v <= hi; ++v) values.insert(v);
    }
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return {values.begin(), values.end()};
}

std::string to_string(const GridPoint& p) {
  return "(" + std::to_string(p.m) + "|" + std::to_string(p.n) + ";" + std::to_string(p.r) + "," +
         std::to_string(p.s) + ")";
}

std::vector<GridPoint> SweepConfig::grid() const {
  std::vector<GridPoint> out;
  for (unsigned a : m)
    for (unsigned b : n)
      for (unsigned c : r)
        for (unsigned d : s) out.push_back({a, b, c, d});
  return out;
}

std::vector<std::pair<unsigned, unsigned>> SweepConfig::superdims() const {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned a : m)
    for (unsigned b : n) out.emplace_back(a, b);
  return out;
}

unsigned SweepConfig::effective_jobs() const {
  if (jobs > 0) return jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace superschur::cli
