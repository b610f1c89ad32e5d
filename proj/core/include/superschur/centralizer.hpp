#pragma once

// Exact queries on subalgebras of the N x N rational matrices: generation by
// closure, commutants, equality, radical, center and block sizes.
//
// Every algebra carries a grading of the ambient matrix space coming from
// diagonal label matrices: index i gets the label vector (H_1[i,i], ...), and
// the matrix unit E_ij has degree label(i) - label(j). Bases are stored per
// degree, which keeps eliminations small.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "superschur/errors.hpp"
#include "superschur/sparse.hpp"

namespace superschur::centralizer {

using Degree = std::vector<Rational>;

class Grading {
 public:
  Grading() = default;
  /// Trivial grading on n indices.
  explicit Grading(std::size_t n) : labels_(n) {}
  /// Labels read off the diagonals of the given (diagonal) matrices.
  static Grading from_diagonals(std::size_t n, const std::vector<SparseMatrix>& diagonals);

  [[nodiscard]] std::size_t size() const { return labels_.size(); }
  [[nodiscard]] std::size_t rank() const { return labels_.empty() ? 0 : labels_.front().size(); }
  [[nodiscard]] const Degree& label(std::size_t i) const { return labels_[i]; }
  [[nodiscard]] Degree degree(std::size_t i, std::size_t j) const;
  [[nodiscard]] Degree zero_degree() const { return Degree(rank(), Rational(0)); }

  /// Splits m into homogeneous components.
  [[nodiscard]] std::map<Degree, SparseMatrix> split(const SparseMatrix& m) const;
  /// Degree of m, or nullopt if m is zero or not homogeneous.
  [[nodiscard]] std::optional<Degree> degree_of(const SparseMatrix& m) const;

  /// Concatenation of the label vectors of two gradings.
  [[nodiscard]] Grading refine(const Grading& other) const;

 private:
  std::vector<Degree> labels_;
};

Degree operator+(const Degree& a, const Degree& b);
Degree operator-(const Degree& a);

class MatrixSubalgebra {
 public:
  struct Block {
    EchelonBasis basis;  // flattened matrices, index i*N+j
  };

  MatrixSubalgebra() = default;
  MatrixSubalgebra(std::size_t n, Grading grading);

  [[nodiscard]] std::size_t ambient() const { return n_; }
  [[nodiscard]] std::size_t dimension() const;
  [[nodiscard]] const Grading& grading() const { return grading_; }
  [[nodiscard]] const std::map<Degree, Block>& blocks() const { return blocks_; }
  [[nodiscard]] bool contains_identity() const;

  /// Basis matrices, grouped by degree.
  [[nodiscard]] std::vector<SparseMatrix> basis() const;
  [[nodiscard]] bool contains(const SparseMatrix& m) const;

  /// Generators the algebra was built from, if known (used for center queries).
  [[nodiscard]] const std::vector<SparseMatrix>& generators() const { return generators_; }
  void set_generators(std::vector<SparseMatrix> gens) { generators_ = std::move(gens); }

  /// Adds a homogeneous element of the given degree; returns true if it enlarged the span.
  bool insert(const Degree& degree, const SparseMatrix& m);

 private:
  std::size_t n_ = 0;
  Grading grading_;
  std::map<Degree, Block> blocks_;
  std::vector<SparseMatrix> generators_;
};

/// Smallest unital algebra containing the generators. The grading is built from
/// the diagonal generators plus every hint for which all generators are homogeneous.
MatrixSubalgebra generate_algebra(std::size_t n, const std::vector<SparseMatrix>& generators,
                                  const std::vector<SparseMatrix>& hints = {}, const ResourceLimits& limits = {});

/// Linear span of the given matrices, checked to be closed under products.
/// Throws VerificationFailure if some product leaves the span.
MatrixSubalgebra span_algebra(std::size_t n, const std::vector<SparseMatrix>& matrices,
                              const std::vector<SparseMatrix>& hints = {}, const ResourceLimits& limits = {});

/// All matrices commuting with every generator. Hints are diagonal matrices
/// commuting with all generators; they only split the linear system.
MatrixSubalgebra commutant(std::size_t n, const std::vector<SparseMatrix>& generators,
                           const std::vector<SparseMatrix>& hints = {}, const ResourceLimits& limits = {});
/// Commutant of an algebra, using its generators when known.
MatrixSubalgebra commutant(const MatrixSubalgebra& a, const std::vector<SparseMatrix>& hints = {},
                           const ResourceLimits& limits = {});

/// True iff the two algebras span the same subspace.
bool subalgebra_equal(const MatrixSubalgebra& a, const MatrixSubalgebra& b);

struct RadicalResult {
  std::vector<SparseMatrix> basis;
  /// Smallest k with J^k = 0 (1 when the radical is zero).
  std::size_t nilpotency_index = 1;
};

/// Kernel of the trace form restricted to a; verified nilpotent.
RadicalResult radical(const MatrixSubalgebra& a);

std::vector<SparseMatrix> center_basis(const MatrixSubalgebra& a, const ResourceLimits& limits = {});
std::size_t center_dimension(const MatrixSubalgebra& a, const ResourceLimits& limits = {});

/// Sizes d_i of the simple blocks M_{d_i}(Q), recovered from central idempotents.
/// nullopt when the center does not split over Q or a block is not a full matrix algebra.
std::optional<std::vector<std::size_t>> block_dimensions(const MatrixSubalgebra& a,
                                                         const ResourceLimits& limits = {});

}  // namespace superschur::centralizer
