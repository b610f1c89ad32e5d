#include "superschur/grassmann.hpp"

#include <bit>
#include <stdexcept>

namespace superschur {

GrassmannElement::GrassmannElement(unsigned generators)
    : generators_(generators), coeffs_(std::size_t{1} << generators) {
  if (generators > 16) throw std::invalid_argument("GrassmannElement: at most 16 generators");
}

GrassmannElement GrassmannElement::scalar(unsigned generators, const Rational& c) {
  GrassmannElement g(generators);
  g.coeffs_[0] = c;
  return g;
}

GrassmannElement GrassmannElement::generator(unsigned generators, unsigned k) {
  if (k >= generators) throw std::out_of_range("GrassmannElement::generator: index out of range");
  GrassmannElement g(generators);
  g.coeffs_[std::size_t{1} << k] = 1;
  return g;
}

bool GrassmannElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (!superschur::is_zero(c)) return false;
  return true;
}

bool GrassmannElement::is_homogeneous(int parity) const {
  for (std::uint32_t mask = 0; mask < coeffs_.size(); ++mask) {
    if (!superschur::is_zero(coeffs_[mask]) && (std::popcount(mask) & 1) != (parity & 1)) return false;
  }
  return true;
}

int grassmann_product_sign(std::uint32_t a, std::uint32_t b) {
  if (a & b) return 0;
  int swaps = 0;
  for (std::uint32_t rest = b; rest != 0; rest &= rest - 1) {
    const int q = std::countr_zero(rest);
    swaps += std::popcount(a >> (q + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

std::optional<GrassmannElement> GrassmannElement::try_inverse() const {
  if (superschur::is_zero(body())) return std::nullopt;
  const Rational inv_body = 1 / body();
  GrassmannElement step = *this;  // -(x - body)/body
  step.coeffs_[0] = 0;
  for (auto& c : step.coeffs_) c *= -inv_body;
  GrassmannElement sum = one();
  GrassmannElement power = one();
  for (unsigned k = 0; k < generators_; ++k) {
    power = power * step;
    if (power.is_zero()) break;
    sum = sum + power;
  }
  for (auto& c : sum.coeffs_) c *= inv_body;
  return sum;
}

GrassmannElement operator+(const GrassmannElement& a, const GrassmannElement& b) {
  if (a.generators_ != b.generators_) throw std::invalid_argument("Grassmann algebras differ");
  GrassmannElement out = a;
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += b.coeffs_[i];
  return out;
}

GrassmannElement operator-(const GrassmannElement& a, const GrassmannElement& b) {
  if (a.generators_ != b.generators_) throw std::invalid_argument("Grassmann algebras differ");
  GrassmannElement out = a;
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] -= b.coeffs_[i];
  return out;
}

GrassmannElement operator-(const GrassmannElement& a) {
  GrassmannElement out = a;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b) {
  if (a.generators_ != b.generators_) throw std::invalid_argument("Grassmann algebras differ");
  GrassmannElement out(a.generators_);
  const auto size = static_cast<std::uint32_t>(a.coeffs_.size());
  for (std::uint32_t x = 0; x < size; ++x) {
    if (superschur::is_zero(a.coeffs_[x])) continue;
    for (std::uint32_t y = 0; y < size; ++y) {
      if (x & y || superschur::is_zero(b.coeffs_[y])) continue;
      const int s = grassmann_product_sign(x, y);
      if (s > 0) {
        out.coeffs_[x | y] += a.coeffs_[x] * b.coeffs_[y];
      } else {
        out.coeffs_[x | y] -= a.coeffs_[x] * b.coeffs_[y];
      }
    }
  }
  return out;
}

Inverter<GrassmannElement> grassmann_inverter() {
  return [](const GrassmannElement& x) { return x.try_inverse(); };
}

GrassmannElement random_grassmann(unsigned generators, int parity, std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> coeff(-bound, bound);
  GrassmannElement out(generators);
  for (std::uint32_t mask = 0; mask < (1u << generators); ++mask) {
    if ((std::popcount(mask) & 1) == parity) out.set_coefficient(mask, coeff(rng));
  }
  return out;
}

SuperMatrix<GrassmannElement> random_even_supermatrix(SuperDim dim, unsigned generators, std::mt19937_64& rng,
                                                      int bound) {
  const GrassmannElement zero(generators);
  auto body_invertible = [&](std::size_t lo, std::size_t hi, const Matrix<GrassmannElement>& m) {
    Matrix<GrassmannElement> body(hi - lo, hi - lo, zero);
    for (std::size_t i = lo; i < hi; ++i)
      for (std::size_t j = lo; j < hi; ++j) body(i - lo, j - lo) = GrassmannElement::scalar(generators, m(i, j).body());
    return !superschur::is_zero(determinant(body).body());
  };
  while (true) {
    Matrix<GrassmannElement> m(dim.total(), dim.total(), zero);
    for (std::size_t i = 0; i < dim.total(); ++i)
      for (std::size_t j = 0; j < dim.total(); ++j)
        m(i, j) = random_grassmann(generators, (dim.parity(i) + dim.parity(j)) & 1, rng, bound);
    if (body_invertible(0, dim.m, m) && body_invertible(dim.m, dim.total(), m)) return {dim, std::move(m)};
  }
}

}  // namespace superschur
