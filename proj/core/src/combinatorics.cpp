#include "superschur/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace superschur::combinatorics {

Partition::Partition(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
  std::erase(parts_, std::size_t{0});
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

std::size_t Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), std::size_t{0}); }

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

std::string Bipartition::to_string() const { return "(" + left.to_string() + "," + right.to_string() + ")"; }

std::vector<Partition> partitions(std::size_t k) {
  std::vector<Partition> out;
  std::vector<std::size_t> current;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t remaining, std::size_t max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (std::size_t p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(k, k);
  return out;
}

bool is_mn_cross(const Partition& left, const Partition& right, std::size_t m, std::size_t n) {
  for (std::size_t i = 1; i <= m + 1; ++i) {
    if (left.part(i) + right.part(m + 2 - i) < n + 1) return true;
  }
  return false;
}

std::vector<Bipartition> enumerate_cross(std::size_t r, std::size_t s, std::size_t m, std::size_t n, CrossMode mode) {
  std::vector<Bipartition> out;
  const std::size_t t_max = mode == CrossMode::exact ? 0 : std::min(r, s);
  for (std::size_t t = 0; t <= t_max; ++t) {
    for (const auto& left : partitions(r - t))
      for (const auto& right : partitions(s - t))
        if (is_mn_cross(left, right, m, n)) out.push_back({left, right});
  }
  return out;
}

const char* to_string(CrossMode mode) { return mode == CrossMode::exact ? "exact" : "contracted"; }

CrossMode parse_cross_mode(const std::string& text) {
  if (text == "exact") return CrossMode::exact;
  if (text == "contracted") return CrossMode::contracted;
  throw std::invalid_argument("unknown mode '" + text + "' (expected exact or contracted)");
}

}  // namespace superschur::combinatorics
