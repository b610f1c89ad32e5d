#pragma once

// gl(m|n), its natural module V, the dual W, and the mixed tensor
// representation rho_{r,s} on T(r,s) = V^{(x)r} (x) W^{(x)s}.

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "superschur/centralizer.hpp"
#include "superschur/errors.hpp"
#include "superschur/sparse.hpp"
#include "superschur/superlinalg.hpp"

namespace superschur::liealg {

/// Matrix unit E_ab of gl(m|n) (0-based indices).
struct GlBasisElement {
  std::size_t a = 0;
  std::size_t b = 0;
  [[nodiscard]] int parity(SuperDim dim) const { return (dim.parity(a) + dim.parity(b)) & 1; }
  friend auto operator<=>(const GlBasisElement&, const GlBasisElement&) = default;
};

using GlCombination = std::map<GlBasisElement, Rational>;

/// All E_ab, row-major.
std::vector<GlBasisElement> gl_basis(SuperDim dim);

/// [E_ab, E_cd] = delta_bc E_ad - (-1)^{(|a|+|b|)(|c|+|d|)} delta_da E_cb.
GlCombination bracket(SuperDim dim, const GlBasisElement& x, const GlBasisElement& y);

/// E_ab e_c = delta_bc e_a.
SparseMatrix action_on_V(SuperDim dim, const GlBasisElement& x);
/// E_ab e_c^* = -(-1)^{(|a|+|b|)|c|} delta_ac e_b^*.
SparseMatrix action_on_W(SuperDim dim, const GlBasisElement& x);

/// Basis of T(r,s): index tuples (v_1..v_r, w_1..w_s), enumerated row-major in base m+n.
class TensorSpace {
 public:
  TensorSpace(SuperDim dim, unsigned r, unsigned s);

  [[nodiscard]] SuperDim dim() const { return dim_; }
  [[nodiscard]] unsigned r() const { return r_; }
  [[nodiscard]] unsigned s() const { return s_; }
  [[nodiscard]] std::size_t factors() const { return r_ + s_; }
  [[nodiscard]] std::size_t size() const { return size_; }

  [[nodiscard]] std::vector<std::size_t> decode(std::size_t index) const;
  [[nodiscard]] std::size_t encode(const std::vector<std::size_t>& tuple) const;
  /// Parities of the factors of a basis tensor (e_c and e_c^* both have parity |c|).
  [[nodiscard]] std::vector<int> parities(const std::vector<std::size_t>& tuple) const;
  [[nodiscard]] int parity(std::size_t index) const;

 private:
  SuperDim dim_;
  unsigned r_;
  unsigned s_;
  std::size_t size_;
};

struct RepresentationMatrixSet {
  TensorSpace space;
  std::vector<GlBasisElement> elements;
  std::vector<SparseMatrix> matrices;

  [[nodiscard]] const SparseMatrix& of(const GlBasisElement& x) const;
  [[nodiscard]] SparseMatrix evaluate(const GlCombination& c) const;
  /// rho(E_aa).
  [[nodiscard]] std::vector<SparseMatrix> cartan() const;
  /// rho(E_aa), rho(E_{a,a+1}), rho(E_{a+1,a}).
  [[nodiscard]] std::vector<SparseMatrix> chevalley() const;
};

/// Leibniz action with sign (-1)^{|x| * (parities of factors strictly before the acted one)}.
RepresentationMatrixSet rho_rs(SuperDim dim, unsigned r, unsigned s, const ResourceLimits& limits = {});

struct PropertyCheck {
  bool ok = true;
  std::size_t checked = 0;
  std::string first_failure;
};

/// rho([x,y]) = rho(x)rho(y) - (-1)^{|x||y|} rho(y)rho(x) for all basis pairs.
PropertyCheck check_representation_property(const RepresentationMatrixSet& reps);
/// rho(E_ab) shifts the parity of basis tensors by |a|+|b|.
PropertyCheck check_parity_homogeneity(const RepresentationMatrixSet& reps);

/// The unital algebra rho(U(gl(m|n))), generated from the Chevalley images.
centralizer::MatrixSubalgebra image_algebra(const RepresentationMatrixSet& reps, const ResourceLimits& limits = {});

/// Dimension of the span of matrix coefficients of rho, computed as dim image_algebra.
std::size_t coefficient_space_dim(const RepresentationMatrixSet& reps, const ResourceLimits& limits = {});

}  // namespace superschur::liealg
