#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "superschur/centralizer.hpp"

using namespace superschur;
using namespace superschur::centralizer;

namespace {

SparseMatrix unit(std::size_t n, std::size_t i, std::size_t j, const Rational& c = 1) {
  SparseMatrix m(n);
  m.add_to(i, j, c);
  return m;
}

// Dimension of the unital algebra generated by gens: dense closure under products.
std::size_t closure_dimension(std::size_t n, const std::vector<SparseMatrix>& gens) {
  std::vector<SparseMatrix> span{SparseMatrix::identity(n)};
  std::size_t dim = 1;
  while (true) {
    std::vector<SparseMatrix> next = span;
    for (const auto& a : span)
      for (const auto& g : gens) next.push_back(g * a);
    const std::size_t d = oracle::span_dimension(next);
    if (d == dim) return d;
    dim = d;
    span = std::move(next);
  }
}

}  // namespace

TEST_CASE("full matrix algebra") {
  const std::size_t n = 3;
  const std::vector<SparseMatrix> gens = {unit(n, 0, 1), unit(n, 1, 2), unit(n, 2, 0)};
  const auto a = generate_algebra(n, gens);
  CHECK(a.dimension() == 9);
  CHECK(a.contains_identity());
  CHECK(commutant(a).dimension() == 1);
  CHECK(radical(a).basis.empty());
  CHECK(center_dimension(a) == 1);
  CHECK(block_dimensions(a) == std::vector<std::size_t>{3});
}

TEST_CASE("upper triangular algebra and its radical") {
  const std::size_t n = 3;
  const std::vector<SparseMatrix> gens = {unit(n, 0, 0), unit(n, 1, 1), unit(n, 0, 1), unit(n, 1, 2)};
  const auto a = generate_algebra(n, gens);
  CHECK(a.dimension() == closure_dimension(n, gens));
  CHECK(a.dimension() == 6);
  const auto rad = radical(a);
  CHECK(rad.basis.size() == 3);
  CHECK(rad.nilpotency_index == 3);
  for (const auto& j : rad.basis) CHECK(a.contains(j));
  CHECK(center_dimension(a) == 1);
  CHECK_FALSE(block_dimensions(a).has_value());
}

TEST_CASE("block diagonal algebra") {
  const std::size_t n = 4;
  std::vector<SparseMatrix> gens = {unit(n, 0, 1), unit(n, 1, 0), unit(n, 2, 2), unit(n, 3, 3)};
  const auto a = generate_algebra(n, gens);
  CHECK(a.dimension() == 6);
  CHECK(center_dimension(a) == 3);
  CHECK(block_dimensions(a) == std::vector<std::size_t>{2, 1, 1});
  const auto c = commutant(a);
  CHECK(c.dimension() == oracle::commutant_dimension(n, gens));
  CHECK(subalgebra_equal(commutant(c), a));
}

TEST_CASE("center that does not split over Q") {
  SparseMatrix rot(2);
  rot.add_to(0, 1, -1);
  rot.add_to(1, 0, 1);
  const auto a = generate_algebra(2, {rot});
  CHECK(a.dimension() == 2);
  CHECK(center_dimension(a) == 2);
  CHECK(radical(a).basis.empty());
  CHECK_FALSE(block_dimensions(a).has_value());
}

TEST_CASE("random generators against dense oracles") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> val(-2, 2);
  std::uniform_int_distribution<int> keep(0, 3);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 2 + trial % 3;
    std::vector<SparseMatrix> gens;
    for (int g = 0; g < 1 + trial % 2; ++g) {
      SparseMatrix m(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (keep(rng) == 0) m.add_to(i, j, val(rng));
      gens.push_back(m);
    }
    const auto a = generate_algebra(n, gens);
    CHECK(a.dimension() == closure_dimension(n, gens));
    CHECK(commutant(n, gens).dimension() == oracle::commutant_dimension(n, gens));
    for (const auto& g : gens) CHECK(a.contains(g));
  }
}

TEST_CASE("gradings and hints") {
  SparseMatrix h(3);
  h.add_to(0, 0, 1);
  h.add_to(2, 2, -1);
  const Grading g = Grading::from_diagonals(3, {h});
  CHECK(g.degree(0, 2) == Degree{Rational(2)});
  SparseMatrix mixed = unit(3, 0, 2) + unit(3, 0, 0);
  CHECK(g.split(mixed).size() == 2);
  CHECK_FALSE(g.degree_of(mixed).has_value());
  CHECK(g.degree_of(unit(3, 2, 0)) == Degree{Rational(-2)});
  // A hint that does not commute with a generator is ignored for commutants.
  const std::vector<SparseMatrix> gens = {unit(3, 0, 1) + unit(3, 1, 0)};
  CHECK(commutant(3, gens, {h}).dimension() == oracle::commutant_dimension(3, gens));
}

TEST_CASE("span_algebra checks closure") {
  const std::size_t n = 2;
  CHECK(span_algebra(n, {SparseMatrix::identity(n), unit(n, 0, 1)}).dimension() == 2);
  CHECK_THROWS_AS(span_algebra(n, {unit(n, 0, 1), unit(n, 1, 0)}), VerificationFailure);
}

TEST_CASE("resource guard") {
  ResourceLimits tight;
  tight.max_ambient_entries = 8;
  CHECK_THROWS_AS(generate_algebra(3, {unit(3, 0, 1)}, {}, tight), ResourceLimitExceeded);
  CHECK_THROWS_AS(commutant(3, {unit(3, 0, 1)}, {}, tight), ResourceLimitExceeded);
}
