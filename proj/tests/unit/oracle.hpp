#pragma once

// Small dense helpers used as independent oracles in the tests.

#include <vector>

#include "superschur/rational.hpp"
#include "superschur/sparse.hpp"

namespace oracle {

using Dense = std::vector<std::vector<superschur::Rational>>;

// Plain Gauss-Jordan rank over Q.
inline std::size_t dense_rank(Dense a) {
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const superschur::Rational f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline Dense to_dense(const superschur::SparseMatrix& m) {
  Dense out(m.size(), std::vector<superschur::Rational>(m.size()));
  m.for_each([&](std::size_t i, std::size_t j, const superschur::Rational& v) { out[i][j] = v; });
  return out;
}

inline std::vector<superschur::Rational> flat(const superschur::SparseMatrix& m) {
  std::vector<superschur::Rational> out(m.size() * m.size());
  m.for_each([&](std::size_t i, std::size_t j, const superschur::Rational& v) { out[i * m.size() + j] = v; });
  return out;
}

// Rank of a family of matrices viewed as vectors.
inline std::size_t span_dimension(const std::vector<superschur::SparseMatrix>& mats) {
  Dense rows;
  for (const auto& m : mats) rows.push_back(flat(m));
  return dense_rank(rows);
}

// dim {X : X g = g X for all g}, from the dense Kronecker system.
inline std::size_t commutant_dimension(std::size_t n, const std::vector<superschur::SparseMatrix>& gens) {
  Dense eqs;
  for (const auto& g : gens) {
    const Dense d = to_dense(g);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l) {
        std::vector<superschur::Rational> row(n * n);
        // (Xg - gX)_{kl} = sum_j X_kj g_jl - sum_i g_ki X_il
        for (std::size_t j = 0; j < n; ++j) row[k * n + j] += d[j][l];
        for (std::size_t i = 0; i < n; ++i) row[i * n + l] -= d[k][i];
        eqs.push_back(std::move(row));
      }
  }
  return n * n - dense_rank(eqs);
}

}  // namespace oracle
