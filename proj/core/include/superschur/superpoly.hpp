#pragma once

// The free supercommutative algebra A(m|n) on generators x_ij, its localization
// at d1*d2, the generic inverse matrix, the bialgebra structure maps and
// bidegree-span rank computations.
//
// Indices are 0-based throughout: x(i, j) with 0 <= i, j < m+n.

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "superschur/errors.hpp"
#include "superschur/rational.hpp"
#include "superschur/superlinalg.hpp"

namespace superschur::superpoly {

/// Upper bound on (m+n)^2.
inline constexpr std::size_t kMaxGenerators = 64;

/// Monomial in the generators. Even generators carry exponents; odd generators
/// occur at most once and are recorded in a bitmask. The bit order is the
/// global lexicographic order on (i, j), so the mask is the canonical sorted product.
struct Monomial {
  std::array<std::uint8_t, kMaxGenerators> exponents{};
  std::uint64_t odd = 0;

  [[nodiscard]] int parity() const { return std::popcount(odd) & 1; }
  [[nodiscard]] unsigned degree() const;
  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Sign and product of two monomials; sign 0 when an odd generator repeats.
std::pair<int, Monomial> multiply(const Monomial& a, const Monomial& b);

/// Exact polynomial in A(m|n), canonical: sorted monomials, nonzero coefficients.
class SuperPolynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  SuperPolynomial() = default;
  static SuperPolynomial constant(const Rational& c);
  static SuperPolynomial from_monomial(const Monomial& m, const Rational& c = 1);
  /// Canonicalizes arbitrary terms (merges duplicates, drops zeros).
  static SuperPolynomial from_terms(std::vector<Term> terms);

  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_homogeneous(int parity) const;
  /// Part without odd generators.
  [[nodiscard]] SuperPolynomial body() const;
  /// Coefficient of a monomial (0 if absent).
  [[nodiscard]] Rational coefficient(const Monomial& m) const;

  friend SuperPolynomial operator+(const SuperPolynomial& a, const SuperPolynomial& b);
  friend SuperPolynomial operator-(const SuperPolynomial& a, const SuperPolynomial& b);
  friend SuperPolynomial operator-(const SuperPolynomial& a);
  friend SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b);
  friend SuperPolynomial operator*(const Rational& c, const SuperPolynomial& a);
  friend bool operator==(const SuperPolynomial&, const SuperPolynomial&) = default;

 private:
  std::vector<Term> terms_;
};

SuperPolynomial pow(const SuperPolynomial& p, unsigned k);

class LocalizedElement;
class CoordinateRing;
using RingPtr = std::shared_ptr<const CoordinateRing>;

/// Multidegree of a monomial: (row counts, column counts), length 2(m+n).
using Weight = std::vector<int>;

/// A(m|n) localized at d1 = det(x_ij)_{i,j<m} and d2 = det(x_ij)_{i,j>=m}.
/// Holds the distinguished elements and the declared units {d1, d2}.
class CoordinateRing {
 public:
  static RingPtr create(SuperDim dim);

  [[nodiscard]] SuperDim dim() const { return dim_; }
  [[nodiscard]] std::size_t size() const { return dim_.total(); }
  [[nodiscard]] std::size_t generator_count() const { return size() * size(); }
  [[nodiscard]] std::size_t generator_index(std::size_t i, std::size_t j) const;
  [[nodiscard]] int generator_parity(std::size_t i, std::size_t j) const {
    return (dim_.parity(i) + dim_.parity(j)) & 1;
  }

  [[nodiscard]] SuperPolynomial x(std::size_t i, std::size_t j) const;
  [[nodiscard]] const SuperPolynomial& d1() const { return d1_; }
  [[nodiscard]] const SuperPolynomial& d2() const { return d2_; }
  [[nodiscard]] SuperPolynomial d1_power(unsigned k) const;
  [[nodiscard]] SuperPolynomial d2_power(unsigned k) const;

  [[nodiscard]] Weight weight(const Monomial& m) const;
  [[nodiscard]] Weight d1_weight() const;
  [[nodiscard]] Weight d2_weight() const;

  /// Counit: x_ij -> delta_ij, extended as an algebra map.
  [[nodiscard]] Rational counit(const SuperPolynomial& p) const;

 private:
  explicit CoordinateRing(SuperDim dim);

  SuperDim dim_;
  SuperPolynomial d1_;
  SuperPolynomial d2_;
  mutable std::mutex cache_mutex_;
  mutable std::vector<SuperPolynomial> d1_powers_;
  mutable std::vector<SuperPolynomial> d2_powers_;
};

/// numerator / (d1^a d2^b). Equality is decided by cross-multiplication.
class LocalizedElement {
 public:
  LocalizedElement(RingPtr ring, SuperPolynomial numerator, unsigned d1_power = 0, unsigned d2_power = 0);

  static LocalizedElement generator(const RingPtr& ring, std::size_t i, std::size_t j);
  static LocalizedElement constant(const RingPtr& ring, const Rational& c);
  /// numerator * d1^e1 * d2^e2 with possibly negative exponents.
  static LocalizedElement with_exponents(const RingPtr& ring, const SuperPolynomial& numerator, int e1, int e2);

  [[nodiscard]] const RingPtr& ring() const { return ring_; }
  [[nodiscard]] const SuperPolynomial& numerator() const { return numerator_; }
  [[nodiscard]] unsigned d1_power() const { return a_; }
  [[nodiscard]] unsigned d2_power() const { return b_; }

  [[nodiscard]] bool is_zero() const { return numerator_.is_zero(); }
  [[nodiscard]] bool is_homogeneous(int parity) const { return numerator_.is_homogeneous(parity); }
  [[nodiscard]] LocalizedElement zero() const { return {ring_, {}, 0, 0}; }
  [[nodiscard]] LocalizedElement one() const { return {ring_, SuperPolynomial::constant(1), 0, 0}; }

  /// Same value with denominator d1^a d2^b; requires a >= d1_power(), b >= d2_power().
  [[nodiscard]] LocalizedElement rescaled(unsigned a, unsigned b) const;
  /// Counit, using eps(d1) = eps(d2) = 1.
  [[nodiscard]] Rational counit() const;

  friend LocalizedElement operator+(const LocalizedElement& u, const LocalizedElement& v);
  friend LocalizedElement operator-(const LocalizedElement& u, const LocalizedElement& v);
  friend LocalizedElement operator-(const LocalizedElement& u);
  friend LocalizedElement operator*(const LocalizedElement& u, const LocalizedElement& v);
  /// Cross-multiplied equality.
  friend bool operator==(const LocalizedElement& u, const LocalizedElement& v);

 private:
  RingPtr ring_;
  SuperPolynomial numerator_;
  unsigned a_ = 0;
  unsigned b_ = 0;
};

/// Unit oracle with declared units d1, d2: inverts u when the body of its
/// numerator is c * d1^p * d2^q, via a finite geometric series in the odd part.
std::optional<LocalizedElement> try_invert(const LocalizedElement& u);
Inverter<LocalizedElement> unit_oracle();

/// The generic matrix X = (x_ij) as an even supermatrix over the localization.
SuperMatrix<LocalizedElement> generic_matrix(const RingPtr& ring);

/// (x~_ij) = X^{-1}, computed by block inversion with units d1, d2.
Matrix<LocalizedElement> generic_inverse(const RingPtr& ring);

/// D(i, j): X with row i replaced by the unit row having 1 in column j.
SuperMatrix<LocalizedElement> unit_row_replacement(const RingPtr& ring, std::size_t i, std::size_t j);

/// Ber_ij = Ber(D(i, j)) and Ber*_ij = Ber*(D(i, j)).
LocalizedElement berezinian_minor(const RingPtr& ring, std::size_t i, std::size_t j);
LocalizedElement berezinian_star_minor(const RingPtr& ring, std::size_t i, std::size_t j);

/// Super Cramer rule for x~_ij: Ber_ji Ber^{-1} when j < m, Ber*_ji (Ber*)^{-1} when j >= m.
LocalizedElement cramer_entry(const RingPtr& ring, std::size_t i, std::size_t j);

/// Same quotients with the row index taken from i (row i of X replaced, case split on i).
/// Evaluates to x~_ji; kept to document the index convention.
LocalizedElement cramer_entry_row_convention(const RingPtr& ring, std::size_t i, std::size_t j);

/// Element of the localization tensored with itself:
/// sum c * (mL ⊗ mR) / ((d1^a1 d2^b1) ⊗ (d1^a2 d2^b2)).
class TensorSquareElement {
 public:
  using Key = std::pair<Monomial, Monomial>;
  using Term = std::pair<Key, Rational>;

  explicit TensorSquareElement(RingPtr ring);
  static TensorSquareElement tensor(const LocalizedElement& left, const LocalizedElement& right);
  static TensorSquareElement one(const RingPtr& ring);

  [[nodiscard]] const RingPtr& ring() const { return ring_; }
  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] const std::array<unsigned, 4>& powers() const { return powers_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_homogeneous(int parity) const;
  [[nodiscard]] TensorSquareElement zero() const { return TensorSquareElement(ring_); }
  [[nodiscard]] TensorSquareElement one() const { return one(ring_); }

  /// Same value over larger denominators.
  [[nodiscard]] TensorSquareElement rescaled(const std::array<unsigned, 4>& powers) const;

  friend TensorSquareElement operator+(const TensorSquareElement& u, const TensorSquareElement& v);
  friend TensorSquareElement operator-(const TensorSquareElement& u, const TensorSquareElement& v);
  friend TensorSquareElement operator-(const TensorSquareElement& u);
  /// (x ⊗ y)(w ⊗ z) = (-1)^{|y||w|} (xw ⊗ yz)
  friend TensorSquareElement operator*(const TensorSquareElement& u, const TensorSquareElement& v);
  friend bool operator==(const TensorSquareElement& u, const TensorSquareElement& v);

 private:
  static std::vector<Term> canonical(std::vector<Term> terms);

  RingPtr ring_;
  std::vector<Term> terms_;
  std::array<unsigned, 4> powers_{};
};

/// Delta(x_ij) = sum_k x_ik ⊗ x_kj
TensorSquareElement delta_generator(const RingPtr& ring, std::size_t i, std::size_t j);

/// C_ij = sum_k (-1)^{(|i|+|k|)(|k|+|j|)} x~_kj ⊗ x~_ik, the comultiplication of x~_ij.
TensorSquareElement delta_inverse_formula(const RingPtr& ring, const Matrix<LocalizedElement>& inverse,
                                          std::size_t i, std::size_t j);

/// The matrix A C (or C A when inverse_first), row-major, where A_ij = Delta(x_ij) and
/// C_ij is delta_inverse_formula. Same value as the plain matrix product, but the sum
/// over the middle index is taken inside one tensor factor before tensoring.
std::vector<TensorSquareElement> coproduct_products(const RingPtr& ring, const Matrix<LocalizedElement>& inverse,
                                                   bool inverse_first);

/// Symbol of a generator used by the formal structure-map checks.
struct GeneratorSymbol {
  bool inverse = false;  // x~ instead of x
  std::size_t i = 0;
  std::size_t j = 0;
  auto operator<=>(const GeneratorSymbol&) const = default;
};

/// Formal linear combination of tensor words of generator symbols.
using FormalTensor = std::map<std::vector<GeneratorSymbol>, int>;

/// Delta on a generator symbol, as a formal combination of 2-letter words.
FormalTensor formal_delta(SuperDim dim, const GeneratorSymbol& g);

/// (Delta ⊗ id) Delta(g) == (id ⊗ Delta) Delta(g) for every x and x~ generator.
bool check_coassociativity(SuperDim dim);

/// (eps ⊗ id) Delta(g) == g == (id ⊗ eps) Delta(g) for every x and x~ generator.
bool check_counit_laws(SuperDim dim);

/// (f ⊗ f) ∘ Delta == Delta' ∘ f on all generators, for f: x_ij -> (-1)^{|j|(|i|+|j|)} x_ij and
/// Delta'(x_ij) = sum_h (-1)^{(|i|+|h|)(|h|+|j|)} x_ih ⊗ x_hj.
bool twist_isomorphism_check(SuperDim dim);

/// Spanning set of the bidegree-(r, s) component: all products of r generators x
/// and s generators x~ (multisets of indices; ordering only changes signs).
struct BidegreeSpan {
  unsigned r = 0;
  unsigned s = 0;
  std::vector<LocalizedElement> spanning;
};

BidegreeSpan bidegree_span(const RingPtr& ring, const Matrix<LocalizedElement>& inverse, unsigned r,
                           unsigned s, const ResourceLimits& limits = {});

/// Exact rank over Q of a family of localized elements. Elements are grouped by
/// their multidegree (independent across groups), brought to a common
/// denominator within each group, and eliminated exactly.
std::size_t span_rank(const std::vector<LocalizedElement>& elements);

/// True iff every element of `small` lies in the span of `big`.
bool span_contains(const std::vector<LocalizedElement>& big, const std::vector<LocalizedElement>& small);

std::size_t bidegree_dimension(const RingPtr& ring, const Matrix<LocalizedElement>& inverse, unsigned r,
                               unsigned s, const ResourceLimits& limits = {});

/// span(r, s) ⊆ span(r+1, s+1)
bool span_inclusion(const RingPtr& ring, const Matrix<LocalizedElement>& inverse, unsigned r, unsigned s,
                    const ResourceLimits& limits = {});

}  // namespace superschur::superpoly
