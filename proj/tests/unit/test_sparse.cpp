#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "superschur/sparse.hpp"

using namespace superschur;

TEST_CASE("sparse vector canonical form") {
  SparseVector v({{3, Rational(2)}, {1, Rational(1)}, {3, Rational(-2)}, {0, Rational(0)}});
  CHECK(v.nnz() == 1);
  CHECK(v.leading_index() == 1);
  CHECK(v.at(3) == 0);
  SparseVector w({{1, Rational(1, 2)}, {5, Rational(4)}});
  v.axpy(Rational(-2), w);
  CHECK(v.nnz() == 1);
  CHECK(v.at(5) == -8);
  CHECK(w.dot(w) == Rational(65, 4));
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("echelon rank and nullspace agree with dense elimination") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> val(-2, 2);
  std::uniform_int_distribution<int> keep(0, 2);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 1 + trial % 7;
    const std::size_t cols = 1 + (trial * 3) % 8;
    oracle::Dense dense(rows, std::vector<Rational>(cols));
    std::vector<SparseVector> vecs;
    for (std::size_t i = 0; i < rows; ++i) {
      std::vector<SparseVector::Entry> e;
      for (std::size_t j = 0; j < cols; ++j) {
        if (keep(rng) == 0) continue;
        dense[i][j] = val(rng);
        e.emplace_back(static_cast<SparseVector::Index>(j), dense[i][j]);
      }
      vecs.emplace_back(std::move(e));
    }
    const std::size_t rank = oracle::dense_rank(dense);
    CHECK(rank_of(vecs) == rank);

    EchelonBasis basis;
    for (const auto& v : vecs) basis.insert(v);
    const auto null = basis.nullspace(cols);
    CHECK(null.size() == cols - rank);
    for (const auto& x : null)
      for (const auto& v : vecs) CHECK(is_zero(v.dot(x)));
    for (const auto& v : vecs) CHECK(basis.contains(v));
  }
}

TEST_CASE("reduced rows have cleared pivot columns") {
  EchelonBasis b;
  b.insert(SparseVector({{0, 1}, {1, 2}, {2, 3}}));
  b.insert(SparseVector({{1, 1}, {2, 1}}));
  const auto rows = b.reduced_rows();
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].at(1) == 0);
  CHECK(rows[0].at(2) == 1);
  CHECK(rows[1].leading_index() == 1);
}

TEST_CASE("sparse matrix arithmetic") {
  SparseMatrix a(2);
  a.add_to(0, 1, 3);
  a.add_to(1, 0, Rational(1, 3));
  const SparseMatrix id = SparseMatrix::identity(2);
  CHECK(a * id == a);
  CHECK(a * a == SparseMatrix::identity(2));
  CHECK(a.transpose().at(1, 0) == 3);
  CHECK((a - a).is_zero());
  CHECK(trace_of_product(a, a) == 2);
  CHECK(supercommutator(a, a, 1).is_zero());
  CHECK(SparseMatrix::from_flat(2, a.flatten()) == a);
}
