#include <stdexcept>

#include "doctest.h"
#include "superschur/combinatorics.hpp"

using namespace superschur::combinatorics;

namespace {

// Partition numbers from Euler's pentagonal recurrence.
std::vector<long> partition_numbers(std::size_t up_to) {
  std::vector<long> p(up_to + 1, 0);
  p[0] = 1;
  for (std::size_t n = 1; n <= up_to; ++n) {
    for (long k = 1;; ++k) {
      const long g1 = k * (3 * k - 1) / 2;
      const long g2 = k * (3 * k + 1) / 2;
      if (g1 > static_cast<long>(n)) break;
      const long sign = (k % 2) ? 1 : -1;
      p[n] += sign * p[n - g1];
      if (g2 <= static_cast<long>(n)) p[n] += sign * p[n - g2];
    }
  }
  return p;
}

}  // namespace

TEST_CASE("partitions") {
  CHECK(partitions(0).size() == 1);
  CHECK(partitions(0).front().length() == 0);
  CHECK(partitions(3).size() == 3);
  CHECK(partitions(5).size() == 7);
  const auto p = partition_numbers(12);
  for (std::size_t k = 0; k <= 12; ++k) {
    const auto list = partitions(k);
    CHECK(list.size() == static_cast<std::size_t>(p[k]));
    for (const auto& lambda : list) CHECK(lambda.size() == k);
    for (std::size_t i = 1; i < list.size(); ++i) CHECK(list[i] != list[i - 1]);
  }
}

TEST_CASE("partition normal form") {
  const Partition p({1, 0, 3, 2});
  CHECK(p.parts() == std::vector<std::size_t>{3, 2, 1});
  CHECK(p.part(1) == 3);
  CHECK(p.part(4) == 0);
  CHECK(p.part(0) == 0);
  CHECK(p.to_string() == "(3,2,1)");
}

TEST_CASE("cross condition") {
  CHECK(is_mn_cross(Partition({1}), Partition({1}), 3, 1));
  CHECK(is_mn_cross(Partition({2}), Partition({1, 1}), 1, 1));
  CHECK_FALSE(is_mn_cross(Partition({1}), Partition(), 0, 0));
  CHECK(is_mn_cross(Partition(), Partition(), 0, 0));
  // (2|0): some lambda_L_i + lambda_R_{4-i} must vanish, i.e. at most two rows in total.
  CHECK_FALSE(is_mn_cross(Partition({1, 1}), Partition({1}), 2, 0));
  CHECK(is_mn_cross(Partition({1}), Partition({1}), 2, 0));
  CHECK(is_mn_cross(Partition({3}), Partition({2}), 2, 0));
}

TEST_CASE("cross bipartition enumeration") {
  CHECK(enumerate_cross(1, 1, 3, 1, CrossMode::exact).size() == 1);
  const auto contracted = enumerate_cross(1, 1, 3, 1, CrossMode::contracted);
  CHECK(contracted.size() == 2);
  CHECK(contracted.back().to_string() == "((),())");
  CHECK(enumerate_cross(0, 0, 2, 1, CrossMode::contracted).size() == 1);
  for (std::size_t r = 0; r <= 3; ++r)
    for (std::size_t s = 0; s <= 3; ++s)
      for (std::size_t m = 0; m <= 3; ++m)
        for (std::size_t n = 0; n <= 2; ++n) {
          const auto exact = enumerate_cross(r, s, m, n, CrossMode::exact);
          const auto all = enumerate_cross(r, s, m, n, CrossMode::contracted);
          for (const auto& b : exact) CHECK(std::find(all.begin(), all.end(), b) != all.end());
          if (n >= r + s) {
            CHECK(exact.size() == partitions(r).size() * partitions(s).size());
          }
        }
  CHECK(parse_cross_mode("exact") == CrossMode::exact);
  CHECK_THROWS_AS(parse_cross_mode("both"), std::invalid_argument);
}
