#pragma once

// Sweep configuration shared by all subcommands.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "superschur/combinatorics.hpp"
#include "superschur/errors.hpp"

namespace superschur::cli {

/// Thrown for malformed flags, ranges or config files (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "3", "1..4" or "0,2,5" (pieces may be mixed: "0,2..3").
std::vector<unsigned> parse_range(const std::string& text);

struct GridPoint {
  unsigned m = 0;
  unsigned n = 0;
  unsigned r = 0;
  unsigned s = 0;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

std::string to_string(const GridPoint& p);

struct SweepConfig {
  std::vector<unsigned> m{1};
  std::vector<unsigned> n{1};
  std::vector<unsigned> r{1};
  std::vector<unsigned> s{0};
  ResourceLimits limits;
  /// Symbolic checks need m+n at most this.
  unsigned symbolic_bound = 4;
  std::string cache_dir;
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  combinatorics::CrossMode mode = combinatorics::CrossMode::contracted;
  bool strict = false;
  unsigned jobs = 0;  // 0 = hardware concurrency

  /// Cartesian product, in lexicographic order.
  [[nodiscard]] std::vector<GridPoint> grid() const;
  /// Distinct (m, n) pairs of the grid.
  [[nodiscard]] std::vector<std::pair<unsigned, unsigned>> superdims() const;
  [[nodiscard]] unsigned effective_jobs() const;
};

}  // namespace superschur::cli
