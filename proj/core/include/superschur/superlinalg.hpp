#pragma once

// Z/2-graded index bookkeeping and supermatrix operations over an arbitrary
// supercommutative coefficient ring.

#include <bit>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "superschur/errors.hpp"

namespace superschur {

/// Super-dimension (m|n): indices 0..m-1 are even, m..m+n-1 are odd.
struct SuperDim {
  std::size_t m = 0;
  std::size_t n = 0;

  [[nodiscard]] std::size_t total() const { return m + n; }
  [[nodiscard]] int parity(std::size_t index) const {
    if (index >= m + n) throw std::out_of_range("SuperDim::parity: index out of range");
    return index < m ? 0 : 1;
  }
  [[nodiscard]] SuperDim flipped() const { return {n, m}; }
  friend bool operator==(const SuperDim&, const SuperDim&) = default;
};

/// Parities of an ordered list of tensor factors and the Koszul signs they induce.
class KoszulContext {
 public:
  KoszulContext() = default;
  explicit KoszulContext(std::vector<int> parities) : parities_(std::move(parities)) {}

  [[nodiscard]] const std::vector<int>& parities() const { return parities_; }
  [[nodiscard]] int total_parity() const;

  /// (-1)^{|a||b|} for the two homogeneous parities.
  static int swap_sign(int a, int b) { return (a & b & 1) ? -1 : 1; }

  /// (-1)^{p * (sum of parities of factors strictly before position k)}.
  [[nodiscard]] int sign_before(std::size_t k, int p) const;

  /// Sign acquired by reordering the factors so that output position t holds
  /// input factor order[t].
  [[nodiscard]] int permutation_sign(const std::vector<std::size_t>& order) const;

 private:
  std::vector<int> parities_;
};

/// Requirements on the coefficient ring of a supermatrix. zero()/one() return
/// the neutral elements of the ring the receiver belongs to.
template <class R>
concept SuperRingElement = std::copyable<R> && requires(const R& a, const R& b) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.zero() } -> std::convertible_to<R>;
  { a.one() } -> std::convertible_to<R>;
  { a.is_homogeneous(0) } -> std::convertible_to<bool>;
};

/// Unit oracle: returns the inverse of an element declared invertible, nullopt otherwise.
template <class R>
using Inverter = std::function<std::optional<R>(const R&)>;

/// Dense rectangular matrix over R.
template <SuperRingElement R>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const R& zero)
      : rows_(rows), cols_(cols), zero_(zero.zero()), data_(rows * cols, zero_) {}

  static Matrix identity(std::size_t n, const R& proto) {
    Matrix out(n, n, proto);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = proto.one();
    return out;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] const R& zero() const { return zero_; }

  R& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix out(nr, nc, zero_);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  [[nodiscard]] Matrix transpose() const {
    Matrix out(cols_, rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  [[nodiscard]] bool is_zero() const {
    for (const auto& e : data_)
      if (!e.is_zero()) return false;
    return true;
  }

  /// Entrywise right multiplication by a scalar: (a_ij * c).
  [[nodiscard]] Matrix times(const R& c) const {
    Matrix out = *this;
    for (auto& e : out.data_) e = e * c;
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix out = a;
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] = a.data_[k] + b.data_[k];
    return out;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix out = a;
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] = a.data_[k] - b.data_[k];
    return out;
  }
  friend Matrix operator-(const Matrix& a) {
    Matrix out = a;
    for (auto& e : out.data_) e = -e;
    return out;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix product: inner dimensions differ");
    Matrix out(a.rows_, b.cols_, a.zero_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) {
        R acc = a.zero_;
        for (std::size_t k = 0; k < a.cols_; ++k) {
          if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
          acc = acc + a(i, k) * b(k, j);
        }
        out(i, j) = std::move(acc);
      }
    return out;
  }

 private:
  static void check_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Matrix shape mismatch");
  }

  std::size_t rows_;
  std::size_t cols_;
  R zero_;
  std::vector<R> data_;
};

/// True iff a and b agree entrywise under R's notion of zero.
template <SuperRingElement R>
bool equal(const Matrix<R>& a, const Matrix<R>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return (a - b).is_zero();
}

/// Determinant by Laplace expansion with memoisation over used-column sets.
/// Products are formed in row order, so one row of odd entries is allowed.
template <SuperRingElement R>
R determinant(const Matrix<R>& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("determinant: non-square matrix");
  if (n == 0) return a.zero().one();
  if (n > 20) throw ResourceLimitExceeded("determinant: matrix too large for subset expansion");
  std::vector<std::optional<R>> dp(std::size_t{1} << n);
  dp[0] = a.zero().one();
  for (std::uint32_t mask = 0; mask < dp.size(); ++mask) {
    if (!dp[mask]) continue;
    const auto row = static_cast<std::size_t>(std::popcount(mask));
    if (row == n) continue;
    for (std::size_t c = 0; c < n; ++c) {
      if (mask & (1u << c)) continue;
      if (a(row, c).is_zero()) continue;
      const int unused_before = static_cast<int>(c) - std::popcount(mask & ((1u << c) - 1));
      R term = *dp[mask] * a(row, c);
      if (unused_before & 1) term = -term;
      auto& slot = dp[mask | (1u << c)];
      slot = slot ? *slot + term : term;
    }
  }
  const auto& full = dp.back();
  return full ? *full : a.zero();
}

/// Classical adjugate: adj(a) * a = a * adj(a) = det(a) * Id for even entries.
template <SuperRingElement R>
Matrix<R> adjugate(const Matrix<R>& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("adjugate: non-square matrix");
  Matrix<R> out(n, n, a.zero());
  if (n == 1) {
    out(0, 0) = a.zero().one();
    return out;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // adj(i, j) = (-1)^{i+j} det(a without row j and column i)
      Matrix<R> minor(n - 1, n - 1, a.zero());
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          minor(rr, cc++) = a(r, c);
        }
        ++rr;
      }
      R d = determinant(minor);
      out(i, j) = ((i + j) & 1) ? -d : d;
    }
  return out;
}

template <SuperRingElement R>
R require_inverse(const Inverter<R>& inverter, const R& x, const char* what) {
  auto inv = inverter(x);
  if (!inv) throw NotInvertible(std::string(what) + " is not a unit under the supplied oracle");
  return *std::move(inv);
}

/// Inverse of a square matrix with even entries via adjugate over determinant.
template <SuperRingElement R>
Matrix<R> invert_by_adjugate(const Matrix<R>& a, const Inverter<R>& inverter, const char* what) {
  if (a.rows() == 0) return a;
  R det_inv = require_inverse(inverter, determinant(a), what);
  return adjugate(a).times(det_inv);
}

/// Square matrix over R graded by a SuperDim on both rows and columns.
/// Blocks: T1 (even,even) m x m, T2 (even,odd) m x n, T3 (odd,even) n x m, T4 (odd,odd) n x n.
template <SuperRingElement R>
class SuperMatrix {
 public:
  SuperMatrix(SuperDim dim, Matrix<R> entries) : dim_(dim), entries_(std::move(entries)) {
    if (entries_.rows() != dim_.total() || entries_.cols() != dim_.total()) {
      throw std::invalid_argument("SuperMatrix: entries must be a square (m+n) x (m+n) matrix");
    }
  }

  static SuperMatrix identity(SuperDim dim, const R& proto) {
    return SuperMatrix(dim, Matrix<R>::identity(dim.total(), proto));
  }

  static SuperMatrix from_blocks(SuperDim dim, const Matrix<R>& t1, const Matrix<R>& t2,
                                 const Matrix<R>& t3, const Matrix<R>& t4) {
    Matrix<R> all(dim.total(), dim.total(), t1.zero());
    all.set_block(0, 0, t1);
    all.set_block(0, dim.m, t2);
    all.set_block(dim.m, 0, t3);
    all.set_block(dim.m, dim.m, t4);
    return SuperMatrix(dim, std::move(all));
  }

  [[nodiscard]] SuperDim dim() const { return dim_; }
  [[nodiscard]] const Matrix<R>& entries() const { return entries_; }
  const R& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

  [[nodiscard]] Matrix<R> t1() const { return entries_.block(0, 0, dim_.m, dim_.m); }
  [[nodiscard]] Matrix<R> t2() const { return entries_.block(0, dim_.m, dim_.m, dim_.n); }
  [[nodiscard]] Matrix<R> t3() const { return entries_.block(dim_.m, 0, dim_.n, dim_.m); }
  [[nodiscard]] Matrix<R> t4() const { return entries_.block(dim_.m, dim_.m, dim_.n, dim_.n); }

  /// Even supermatrix: diagonal blocks hold even elements, off-diagonal blocks odd ones.
  [[nodiscard]] bool is_even() const {
    for (std::size_t i = 0; i < dim_.total(); ++i)
      for (std::size_t j = 0; j < dim_.total(); ++j)
        if (!entries_(i, j).is_homogeneous((dim_.parity(i) + dim_.parity(j)) & 1)) return false;
    return true;
  }

  friend SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("SuperMatrix product: gradings differ");
    return SuperMatrix(a.dim_, a.entries_ * b.entries_);
  }

  friend bool equal(const SuperMatrix& a, const SuperMatrix& b) {
    return a.dim_ == b.dim_ && equal(a.entries_, b.entries_);
  }

 private:
  SuperDim dim_;
  Matrix<R> entries_;
};

/// [[T1,T2],[T3,T4]] -> [[T1^t, T3^t], [-T2^t, T4^t]]
template <SuperRingElement R>
SuperMatrix<R> supertranspose(const SuperMatrix<R>& mat) {
  return SuperMatrix<R>::from_blocks(mat.dim(), mat.t1().transpose(), mat.t3().transpose(),
                                     -mat.t2().transpose(), mat.t4().transpose());
}

/// [[T1,T2],[T3,T4]] over (m|n) -> [[T4,T3],[T2,T1]] over (n|m)
template <SuperRingElement R>
SuperMatrix<R> parity_flip(const SuperMatrix<R>& mat) {
  return SuperMatrix<R>::from_blocks(mat.dim().flipped(), mat.t4(), mat.t3(), mat.t2(), mat.t1());
}

/// Ber(T) = det(T1 - T2 T4^{-1} T3) * det(T4)^{-1}
template <SuperRingElement R>
R berezinian(const SuperMatrix<R>& mat, const Inverter<R>& inverter) {
  const SuperDim d = mat.dim();
  const Matrix<R> t1 = mat.t1();
  if (d.n == 0) return determinant(t1);
  const Matrix<R> t4 = mat.t4();
  const R det4_inv = require_inverse(inverter, determinant(t4), "det(T4)");
  if (d.m == 0) return det4_inv;
  const Matrix<R> t4_inv = adjugate(t4).times(det4_inv);
  const Matrix<R> schur = t1 - mat.t2() * t4_inv * mat.t3();
  return determinant(schur) * det4_inv;
}

/// Ber*(T) = Ber(parity_flip(T))
template <SuperRingElement R>
R berezinian_star(const SuperMatrix<R>& mat, const Inverter<R>& inverter) {
  return berezinian(parity_flip(mat), inverter);
}

/// Exact inverse of an even supermatrix whose diagonal blocks are invertible.
///
/// The larger diagonal block is inverted by adjugate over determinant, the
/// Schur complement of the smaller size likewise; determinant inverses come
/// from the oracle.
template <SuperRingElement R>
SuperMatrix<R> block_invert(const SuperMatrix<R>& mat, const Inverter<R>& inverter) {
  const SuperDim d = mat.dim();
  const Matrix<R> a = mat.t1();
  const Matrix<R> b = mat.t2();
  const Matrix<R> c = mat.t3();
  const Matrix<R> e = mat.t4();
  if (d.m >= d.n) {
    const Matrix<R> a_inv = invert_by_adjugate(a, inverter, "det(T1)");
    if (d.n == 0) return SuperMatrix<R>(d, a_inv);
    const Matrix<R> schur = e - c * a_inv * b;
    const Matrix<R> s_inv = invert_by_adjugate(schur, inverter, "det(T4 - T3 T1^{-1} T2)");
    const Matrix<R> a_inv_b = a_inv * b;
    const Matrix<R> c_a_inv = c * a_inv;
    const Matrix<R> top_right = -(a_inv_b * s_inv);
    const Matrix<R> bottom_left = -(s_inv * c_a_inv);
    const Matrix<R> top_left = a_inv + a_inv_b * s_inv * c_a_inv;
    return SuperMatrix<R>::from_blocks(d, top_left, top_right, bottom_left, s_inv);
  }
  const Matrix<R> e_inv = invert_by_adjugate(e, inverter, "det(T4)");
  if (d.m == 0) return SuperMatrix<R>(d, e_inv);
  const Matrix<R> schur = a - b * e_inv * c;
  const Matrix<R> s_inv = invert_by_adjugate(schur, inverter, "det(T1 - T2 T4^{-1} T3)");
  const Matrix<R> b_e_inv = b * e_inv;
  const Matrix<R> e_inv_c = e_inv * c;
  const Matrix<R> top_right = -(s_inv * b_e_inv);
  const Matrix<R> bottom_left = -(e_inv_c * s_inv);
  const Matrix<R> bottom_right = e_inv + e_inv_c * s_inv * b_e_inv;
  return SuperMatrix<R>::from_blocks(d, s_inv, top_right, bottom_left, bottom_right);
}

}  // namespace superschur
