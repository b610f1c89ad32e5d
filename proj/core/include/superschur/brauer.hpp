#pragma once

// Walled Brauer algebra B_{r,s}(delta): diagrams, composition, and the action
// on T(r,s) built from super flips and the wall contraction.
//
// Vertices 0..L-1 form the top row, L..2L-1 the bottom row (L = r+s); in each
// row positions < r lie left of the wall. Diagrams act on T(r,s) with the bottom
// row as input, so act(d1 o d2) = act(d1) act(d2) when d1 is stacked above d2.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "superschur/centralizer.hpp"
#include "superschur/errors.hpp"
#include "superschur/liealg.hpp"
#include "superschur/sparse.hpp"

namespace superschur::brauer {

class WalledDiagram {
 public:
  /// partner[v] is the vertex joined to v. Throws std::invalid_argument unless legal.
  WalledDiagram(unsigned r, unsigned s, std::vector<std::uint8_t> partner);

  static WalledDiagram identity(unsigned r, unsigned s);
  /// Diagram whose W-flipped form is the permutation: top t joined to bottom perm[t].
  static WalledDiagram from_permutation(unsigned r, unsigned s, const std::vector<std::size_t>& perm);
  /// Transposition of V strands i, i+1 (0 <= i < r-1).
  static WalledDiagram v_flip(unsigned r, unsigned s, unsigned i);
  /// Transposition of W strands r+j, r+j+1 (0 <= j < s-1).
  static WalledDiagram w_flip(unsigned r, unsigned s, unsigned j);
  /// Cap and cup on positions r-1, r.
  static WalledDiagram contraction(unsigned r, unsigned s);

  /// True iff the matching is a perfect matching respecting the wall rules.
  static bool is_legal(unsigned r, unsigned s, const std::vector<std::uint8_t>& partner);

  [[nodiscard]] unsigned r() const { return r_; }
  [[nodiscard]] unsigned s() const { return s_; }
  [[nodiscard]] std::size_t strands() const { return r_ + s_; }
  [[nodiscard]] std::size_t partner(std::size_t v) const { return partner_[v]; }
  [[nodiscard]] const std::vector<std::uint8_t>& matching() const { return partner_; }
  [[nodiscard]] std::vector<std::size_t> to_permutation() const;
  /// Number of top-row (equivalently bottom-row) horizontal edges.
  [[nodiscard]] std::size_t cups() const;
  [[nodiscard]] std::string to_string() const;

  friend auto operator<=>(const WalledDiagram&, const WalledDiagram&) = default;

 private:
  unsigned r_ = 0;
  unsigned s_ = 0;
  std::vector<std::uint8_t> partner_;
};

struct Concatenation {
  WalledDiagram diagram;
  unsigned loops = 0;
};

/// d1 stacked above d2.
Concatenation concatenate(const WalledDiagram& d1, const WalledDiagram& d2);

class BrauerElement {
 public:
  explicit BrauerElement(Rational delta) : delta_(std::move(delta)) {}
  static BrauerElement basis(const WalledDiagram& d, const Rational& delta);

  [[nodiscard]] const Rational& delta() const { return delta_; }
  [[nodiscard]] const std::map<WalledDiagram, Rational>& terms() const { return terms_; }
  [[nodiscard]] Rational coefficient(const WalledDiagram& d) const;
  void add(const WalledDiagram& d, const Rational& c);

  friend BrauerElement operator*(const BrauerElement& a, const BrauerElement& b);
  friend BrauerElement operator+(const BrauerElement& a, const BrauerElement& b);
  friend bool operator==(const BrauerElement& a, const BrauerElement& b);

 private:
  Rational delta_;
  std::map<WalledDiagram, Rational> terms_;
};

/// d1 o d2 = delta^{loops} times the concatenated diagram.
BrauerElement compose(const WalledDiagram& d1, const WalledDiagram& d2, const Rational& delta);

/// All (r+s)! diagrams, in the order of their W-flipped permutations.
std::vector<WalledDiagram> enumerate_diagrams(unsigned r, unsigned s, const ResourceLimits& limits = {});

/// Flips and the contraction (empty when they do not exist).
std::vector<WalledDiagram> generator_diagrams(unsigned r, unsigned s);

/// Signs of ev(e_a (x) e_a^*) and of the coefficient of e_c (x) e_c^* in coev, by parity.
struct ContractionSigns {
  int ev_even = 1;
  int ev_odd = 1;
  int coev_even = 1;
  int coev_odd = 1;
  friend bool operator==(const ContractionSigns&, const ContractionSigns&) = default;
};

/// Super flip of tensor factors p, p+1.
SparseMatrix flip_matrix(const liealg::TensorSpace& space, std::size_t p);
/// coev o ev on factors r-1, r.
SparseMatrix contraction_matrix(const liealg::TensorSpace& space, const ContractionSigns& signs);

/// First sign choice (odd signs varied first, starting from all +) for which the
/// contraction on T(1,1) commutes with gl(m|n) and squares to (m-n) times itself.
ContractionSigns find_contraction_signs(SuperDim dim);

class BrauerAction {
 public:
  BrauerAction(SuperDim dim, unsigned r, unsigned s, const ResourceLimits& limits = {});

  [[nodiscard]] const liealg::TensorSpace& space() const { return space_; }
  [[nodiscard]] const ContractionSigns& signs() const { return signs_; }
  [[nodiscard]] Rational delta() const;
  [[nodiscard]] const std::vector<WalledDiagram>& diagrams() const { return diagrams_; }
  /// Matrix of a diagram, from a loop-free word in the generators.
  [[nodiscard]] const SparseMatrix& act(const WalledDiagram& d) const;
  [[nodiscard]] std::vector<SparseMatrix> matrices() const;
  /// Independent construction: wall-preserving permutation, nested caps/cups, permutation.
  [[nodiscard]] SparseMatrix direct_action(const WalledDiagram& d) const;
  /// Matrix of a formal combination of diagrams.
  [[nodiscard]] SparseMatrix act(const BrauerElement& x) const;

 private:
  SparseMatrix permutation_action(const std::vector<std::size_t>& top_to_bottom) const;
  SparseMatrix nested_contraction(std::size_t k) const;

  liealg::TensorSpace space_;
  ContractionSigns signs_;
  std::vector<WalledDiagram> diagrams_;
  std::map<WalledDiagram, SparseMatrix> matrices_;
};

SparseMatrix act_on_T(const WalledDiagram& d, SuperDim dim, const ResourceLimits& limits = {});

/// Span of all diagram matrices (closure under products is verified).
centralizer::MatrixSubalgebra image_algebra_brauer(const BrauerAction& action, const ResourceLimits& limits = {});
centralizer::MatrixSubalgebra image_algebra_brauer(unsigned r, unsigned s, SuperDim dim,
                                                   const ResourceLimits& limits = {});

}  // namespace superschur::brauer
