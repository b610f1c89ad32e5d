#include <random>

#include "doctest.h"
#include "superschur/grassmann.hpp"
#include "superschur/superlinalg.hpp"

using namespace superschur;

namespace {

using G = GrassmannElement;

G scalar(const Rational& c, unsigned k = 2) { return G::scalar(k, c); }
G theta(unsigned i, unsigned k = 2) { return G::generator(k, i); }

SuperMatrix<G> make(SuperDim d, std::vector<std::vector<G>> rows) {
  Matrix<G> m(d.total(), d.total(), rows[0][0]);
  for (std::size_t i = 0; i < d.total(); ++i)
    for (std::size_t j = 0; j < d.total(); ++j) m(i, j) = rows[i][j];
  return {d, m};
}

}  // namespace

TEST_CASE("parities and Koszul signs") {
  const SuperDim d{2, 1};
  CHECK(d.parity(0) == 0);
  CHECK(d.parity(2) == 1);
  CHECK_THROWS_AS(static_cast<void>(d.parity(3)), std::out_of_range);
  CHECK(KoszulContext::swap_sign(1, 1) == -1);
  CHECK(KoszulContext::swap_sign(1, 0) == 1);
  const KoszulContext k({1, 0, 1});
  CHECK(k.total_parity() == 0);
  CHECK(k.sign_before(2, 1) == -1);
  // Moving the last odd factor to the front passes one odd factor.
  CHECK(k.permutation_sign({2, 0, 1}) == -1);
  CHECK(k.permutation_sign({0, 2, 1}) == 1);
  CHECK(KoszulContext({1, 1}).permutation_sign({1, 0}) == -1);
}

TEST_CASE("Grassmann algebra basics") {
  const G a = theta(0);
  const G b = theta(1);
  CHECK((a * a).is_zero());
  CHECK(a * b == -(b * a));
  CHECK(grassmann_product_sign(0b10, 0b01) == -1);
  CHECK(grassmann_product_sign(0b01, 0b01) == 0);
  const G u = scalar(2) + a * b;
  CHECK(*u.try_inverse() * u == scalar(1));
  CHECK_FALSE((a * b).try_inverse().has_value());
}

TEST_CASE("supertranspose of a (1|1) matrix") {
  const SuperDim d{1, 1};
  const auto m = make(d, {{scalar(5), theta(0)}, {theta(1), scalar(7)}});
  const auto st = supertranspose(m);
  CHECK(st(0, 0) == scalar(5));
  CHECK(st(0, 1) == theta(1));
  CHECK(st(1, 0) == -theta(0));
  CHECK(st(1, 1) == scalar(7));
  CHECK(equal(supertranspose(SuperMatrix<G>::identity(d, scalar(0))), SuperMatrix<G>::identity(d, scalar(0))));
}

TEST_CASE("supertranspose reverses products") {
  std::mt19937_64 rng(11);
  for (SuperDim d : {SuperDim{1, 1}, SuperDim{2, 1}, SuperDim{1, 2}, SuperDim{2, 2}}) {
    for (int k = 0; k < 10; ++k) {
      const auto a = random_even_supermatrix(d, 4, rng);
      const auto b = random_even_supermatrix(d, 4, rng);
      CHECK(a.is_even());
      CHECK(equal(supertranspose(a * b), supertranspose(b) * supertranspose(a)));
    }
  }
}

TEST_CASE("parity flip") {
  const SuperDim d{1, 1};
  const auto m = make(d, {{scalar(2), theta(0)}, {theta(1), scalar(3)}});
  const auto f = parity_flip(m);
  CHECK(f(0, 0) == scalar(3));
  CHECK(f(1, 1) == scalar(2));
  CHECK(equal(parity_flip(f), m));
  CHECK(equal(parity_flip(SuperMatrix<G>::identity({2, 1}, scalar(0))), SuperMatrix<G>::identity({1, 2}, scalar(0))));
}

TEST_CASE("Berezinian examples") {
  const auto inv = grassmann_inverter();
  const SuperDim d{1, 1};
  CHECK(berezinian(make(d, {{scalar(6), scalar(0)}, {scalar(0), scalar(3)}}), inv) == scalar(2));
  CHECK(berezinian(SuperMatrix<G>::identity({2, 2}, scalar(0)), inv) == scalar(1));
  // [[1, t1], [t2, 1]]: Schur complement 1 - t1 * 1 * t2, det T4 = 1.
  const auto m = make(d, {{scalar(1), theta(0)}, {theta(1), scalar(1)}});
  CHECK(berezinian(m, inv) == scalar(1) - theta(0) * theta(1));
  CHECK(berezinian_star(m, inv) * berezinian(m, inv) == scalar(1));
  const auto singular = make(d, {{scalar(1), theta(0)}, {theta(1), theta(0) * theta(1)}});
  CHECK_THROWS_AS(berezinian(singular, inv), NotInvertible);
}

TEST_CASE("Berezinian laws on random matrices") {
  std::mt19937_64 rng(3);
  const auto inv = grassmann_inverter();
  for (SuperDim d : {SuperDim{1, 1}, SuperDim{2, 1}, SuperDim{1, 0}, SuperDim{0, 2}}) {
    for (int k = 0; k < 8; ++k) {
      const auto s = random_even_supermatrix(d, 4, rng);
      const auto t = random_even_supermatrix(d, 4, rng);
      CHECK(berezinian(s * t, inv) == berezinian(s, inv) * berezinian(t, inv));
      CHECK(berezinian_star(s * t, inv) == berezinian_star(s, inv) * berezinian_star(t, inv));
      CHECK(berezinian(s, inv) * berezinian_star(s, inv) == s(0, 0).one());
    }
  }
}

TEST_CASE("block inverse") {
  std::mt19937_64 rng(5);
  const auto inv = grassmann_inverter();
  for (SuperDim d : {SuperDim{1, 1}, SuperDim{2, 1}, SuperDim{0, 2}, SuperDim{2, 0}}) {
    const auto m = random_even_supermatrix(d, 4, rng);
    const auto id = SuperMatrix<G>::identity(d, m(0, 0));
    CHECK(equal(m * block_invert(m, inv), id));
    CHECK(equal(block_invert(m, inv) * m, id));
  }
}

TEST_CASE("determinant by subset expansion matches cofactor expansion") {
  Matrix<G> m(3, 3, scalar(0));
  int v = 1;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = scalar((v++ * 7) % 5 - 2);
  // [[0, 2, -1], [1, -2, 0], [2, -1, 1]], expanded along the first row by hand.
  const Rational expected = 0 - 2 * (1 * 1 - 0 * 2) + (-1) * (1 * -1 - (-2) * 2);
  CHECK(determinant(m) == scalar(expected));
  CHECK(equal(adjugate(m) * m, Matrix<G>::identity(3, scalar(0)).times(determinant(m))));
}
