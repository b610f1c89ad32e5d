#pragma once

// Partitions, bipartitions and the (m|n)-cross condition labelling the blocks
// of End_{gl(m|n)}(T(r,s)).

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace superschur::combinatorics {

class Partition {
 public:
  Partition() = default;
  /// Sorts into weakly decreasing order and drops zero parts.
  explicit Partition(std::vector<std::size_t> parts);

  [[nodiscard]] const std::vector<std::size_t>& parts() const { return parts_; }
  [[nodiscard]] std::size_t size() const;
  [[nodiscard]] std::size_t length() const { return parts_.size(); }
  /// i-th part, 1-based; 0 beyond the length.
  [[nodiscard]] std::size_t part(std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }
  [[nodiscard]] std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<std::size_t> parts_;
};

struct Bipartition {
  Partition left;
  Partition right;
  [[nodiscard]] std::string to_string() const;
  friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
};

/// All partitions of k, in reverse lexicographic order.
std::vector<Partition> partitions(std::size_t k);

/// Exists 1 <= i <= m+1 with left_i + right_{m+2-i} < n+1.
bool is_mn_cross(const Partition& left, const Partition& right, std::size_t m, std::size_t n);

enum class CrossMode { exact, contracted };

/// exact: sizes (r, s); contracted: sizes (r-t, s-t) for 0 <= t <= min(r, s).
std::vector<Bipartition> enumerate_cross(std::size_t r, std::size_t s, std::size_t m, std::size_t n, CrossMode mode);

const char* to_string(CrossMode mode);
/// Accepts "exact" and "contracted"; throws std::invalid_argument otherwise.
CrossMode parse_cross_mode(const std::string& text);

}  // namespace superschur::combinatorics
