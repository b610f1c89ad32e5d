#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "superschur/rational.hpp"
#include "superschur/superlinalg.hpp"

namespace superschur {

/// Element of the Grassmann algebra over Q on k odd generators theta_0..theta_{k-1}.
/// Component `mask` is the coefficient of theta_{i1} theta_{i2} ... with i1 < i2 < ... the set bits.
class GrassmannElement {
 public:
  explicit GrassmannElement(unsigned generators = 0);

  static GrassmannElement scalar(unsigned generators, const Rational& c);
  static GrassmannElement generator(unsigned generators, unsigned k);

  [[nodiscard]] unsigned generators() const { return generators_; }
  [[nodiscard]] const Rational& coefficient(std::uint32_t mask) const { return coeffs_[mask]; }
  void set_coefficient(std::uint32_t mask, const Rational& c) { coeffs_[mask] = c; }
  [[nodiscard]] const Rational& body() const { return coeffs_[0]; }

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_homogeneous(int parity) const;
  [[nodiscard]] GrassmannElement zero() const { return GrassmannElement(generators_); }
  [[nodiscard]] GrassmannElement one() const { return scalar(generators_, 1); }

  /// Inverse when the body is nonzero: body^{-1} * sum_k (-nil/body)^k, a finite sum.
  [[nodiscard]] std::optional<GrassmannElement> try_inverse() const;

  friend GrassmannElement operator+(const GrassmannElement& a, const GrassmannElement& b);
  friend GrassmannElement operator-(const GrassmannElement& a, const GrassmannElement& b);
  friend GrassmannElement operator-(const GrassmannElement& a);
  friend GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b);
  friend bool operator==(const GrassmannElement&, const GrassmannElement&) = default;

 private:
  unsigned generators_;
  std::vector<Rational> coeffs_;
};

/// Sign of theta_a * theta_b reordered into increasing order; 0 if they share a generator.
int grassmann_product_sign(std::uint32_t a, std::uint32_t b);

/// Inverts exactly the elements with nonzero body.
Inverter<GrassmannElement> grassmann_inverter();

/// Homogeneous element with integer coefficients in [-bound, bound].
GrassmannElement random_grassmann(unsigned generators, int parity, std::mt19937_64& rng, int bound = 3);

/// Random even supermatrix whose diagonal blocks have invertible bodies (so the
/// matrix is invertible and both Ber and Ber* are defined).
SuperMatrix<GrassmannElement> random_even_supermatrix(SuperDim dim, unsigned generators, std::mt19937_64& rng,
                                                      int bound = 3);

}  // namespace superschur
