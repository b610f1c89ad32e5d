#include "doctest.h"
#include "oracle.hpp"
#include "superschur/liealg.hpp"

using namespace superschur;
using namespace superschur::liealg;

TEST_CASE("gl(m|n) basis and bracket") {
  const SuperDim d{1, 1};
  CHECK(gl_basis(d).size() == 4);
  const GlBasisElement e01{0, 1};
  const GlBasisElement e10{1, 0};
  CHECK(e01.parity(d) == 1);
  // Two odd elements: the bracket is an anticommutator.
  const auto b = bracket(d, e01, e10);
  CHECK(b.size() == 2);
  CHECK(b.at({0, 0}) == 1);
  CHECK(b.at({1, 1}) == 1);
  const auto even = bracket({2, 0}, {0, 1}, {1, 0});
  CHECK(even.at({0, 0}) == 1);
  CHECK(even.at({1, 1}) == -1);
}

TEST_CASE("natural module and its dual") {
  const SuperDim d{1, 1};
  const auto v = action_on_V(d, {0, 1});
  CHECK(v.at(0, 1) == 1);
  CHECK(v.nnz() == 1);
  // E_01 e_0^* = -e_1^*, E_10 e_1^* = -(-1)^{1*1} e_0^* = e_0^*.
  CHECK(action_on_W(d, {0, 1}).at(1, 0) == -1);
  CHECK(action_on_W(d, {1, 0}).at(0, 1) == 1);
  CHECK(action_on_W(d, {1, 1}).at(1, 1) == -1);
}

TEST_CASE("tensor space indexing") {
  const TensorSpace t({2, 1}, 2, 1);
  CHECK(t.size() == 27);
  const std::vector<std::size_t> tuple{2, 0, 1};
  CHECK(t.decode(t.encode(tuple)) == tuple);
  CHECK(t.parities(tuple) == std::vector<int>{1, 0, 0});
  CHECK(t.parity(t.encode({2, 2, 0})) == 0);
}

TEST_CASE("representation property across a grid") {
  for (std::size_t m = 0; m <= 3; ++m)
    for (std::size_t n = 0; n <= 2; ++n)
      for (unsigned r = 0; r <= 2; ++r)
        for (unsigned s = 0; s <= 2; ++s) {
          if (m + n == 0) continue;
          const TensorSpace space({m, n}, r, s);
          if (space.size() > 125) continue;
          const auto reps = rho_rs({m, n}, r, s);
          CHECK(check_representation_property(reps).ok);
          CHECK(check_parity_homogeneity(reps).ok);
        }
}

TEST_CASE("image dimensions") {
  CHECK(coefficient_space_dim(rho_rs({1, 1}, 1, 0)) == 4);
  CHECK(coefficient_space_dim(rho_rs({1, 1}, 0, 0)) == 1);
  CHECK(coefficient_space_dim(rho_rs({1, 1}, 1, 1)) == 8);
  const auto reps = rho_rs({2, 0}, 1, 1);
  const auto img = image_algebra(reps);
  CHECK(img.dimension() == 10);
  // The image is the commutant of the swap-and-contract operator: compare with the dense oracle.
  SparseMatrix e(4);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t c = 0; c < 2; ++c) e.add_to(c * 2 + c, a * 2 + a, 1);
  CHECK(oracle::commutant_dimension(4, {e}) == 10);
  CHECK(check_parity_homogeneity(reps).ok);
  const auto rho = reps.evaluate({{{0, 1}, Rational(2)}, {{1, 1}, Rational(-1)}});
  CHECK(rho == Rational(2) * reps.of({0, 1}) - reps.of({1, 1}));
}

TEST_CASE("tensor space guard") {
  ResourceLimits tight;
  tight.max_ambient_entries = 10;
  CHECK_THROWS_AS(rho_rs({2, 1}, 2, 1, tight), ResourceLimitExceeded);
}
