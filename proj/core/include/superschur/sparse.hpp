#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "superschur/rational.hpp"

namespace superschur {

/// Sparse rational vector: entries sorted by index, no stored zeros.
class SparseVector {
 public:
  using Index = std::uint32_t;
  using Entry = std::pair<Index, Rational>;

  SparseVector() = default;
  /// Takes arbitrary (index, value) pairs; sorts, merges duplicates, drops zeros.
  explicit SparseVector(std::vector<Entry> entries);

  [[nodiscard]] const std::vector<Entry>& entries() const { return entries_; }
  [[nodiscard]] bool empty() const { return entries_.empty(); }
  [[nodiscard]] std::size_t nnz() const { return entries_.size(); }
  [[nodiscard]] Rational at(Index i) const;
  [[nodiscard]] Index leading_index() const { return entries_.front().first; }
  [[nodiscard]] const Rational& leading_value() const { return entries_.front().second; }

  /// this += factor * other
  void axpy(const Rational& factor, const SparseVector& other);
  void scale(const Rational& factor);
  [[nodiscard]] Rational dot(const SparseVector& other) const;

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::vector<Entry> entries_;
};

/// Incrementally built semi-echelon basis of a subspace of Q^dim.
///
/// Every stored row has leading coefficient 1 at a distinct pivot index.
/// Reduction subtracts rows in increasing pivot order; subtracting the row
/// with pivot p never creates entries below p.
class EchelonBasis {
 public:
  [[nodiscard]] std::size_t rank() const { return rows_.size(); }
  [[nodiscard]] const std::vector<SparseVector>& rows() const { return rows_; }

  /// Reduces v modulo the span. Result is zero iff v lies in the span.
  [[nodiscard]] SparseVector reduce(SparseVector v) const;
  [[nodiscard]] bool contains(const SparseVector& v) const { return reduce(v).empty(); }

  /// Inserts v; returns true iff it was independent of the current span.
  bool insert(const SparseVector& v);

  /// Rows of the reduced row echelon form (each pivot column cleared in all other rows),
  /// sorted by pivot.
  [[nodiscard]] std::vector<SparseVector> reduced_rows() const;

  /// Basis of {x in Q^num_vars : row . x = 0 for every stored row}.
  [[nodiscard]] std::vector<SparseVector> nullspace(std::size_t num_vars) const;

 private:
  std::vector<SparseVector> rows_;
  std::unordered_map<SparseVector::Index, std::size_t> pivot_row_;
};

/// Exact rank of a list of vectors.
std::size_t rank_of(const std::vector<SparseVector>& vectors);

/// Square sparse rational matrix stored by rows.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  explicit SparseMatrix(std::size_t n) : n_(n), rows_(n) {}

  static SparseMatrix identity(std::size_t n);
  /// Flattened index i*n+j.
  static SparseMatrix from_flat(std::size_t n, const SparseVector& flat);

  [[nodiscard]] std::size_t size() const { return n_; }
  [[nodiscard]] const SparseVector& row(std::size_t i) const { return rows_[i]; }
  [[nodiscard]] Rational at(std::size_t i, std::size_t j) const;
  [[nodiscard]] std::size_t nnz() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_diagonal() const;

  /// Adds value at (i, j). Intended for construction; O(row nnz).
  void add_to(std::size_t i, std::size_t j, const Rational& value);
  void set_row(std::size_t i, SparseVector row) { rows_[i] = std::move(row); }

  [[nodiscard]] SparseVector flatten() const;
  [[nodiscard]] SparseMatrix transpose() const;
  [[nodiscard]] Rational trace() const;

  /// Calls f(i, j, value) for each stored entry in row-major order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < n_; ++i) {
      for (const auto& [j, v] : rows_[i].entries()) f(i, static_cast<std::size_t>(j), v);
    }
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator*(const Rational& c, const SparseMatrix& a);
  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<SparseVector> rows_;
};

/// a*b - sign*b*a
SparseMatrix supercommutator(const SparseMatrix& a, const SparseMatrix& b, int sign);

/// trace(a*b) without forming the product.
Rational trace_of_product(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace superschur
