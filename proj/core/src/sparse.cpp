#include "superschur/sparse.hpp"

#include <algorithm>
#include <stdexcept>

namespace superschur {

Rational parse_rational(std::string_view text) {
  Rational q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0) {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  }
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

SparseVector::SparseVector(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (auto& e : entries) {
    if (!entries_.empty() && entries_.back().first == e.first) {
      entries_.back().second += e.second;
    } else {
      entries_.push_back(std::move(e));
    }
  }
  std::erase_if(entries_, [](const Entry& e) { return is_zero(e.second); });
}

Rational SparseVector::at(Index i) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, Index key) { return e.first < key; });
  if (it != entries_.end() && it->first == i) return it->second;
  return 0;
}

void SparseVector::axpy(const Rational& factor, const SparseVector& other) {
  if (is_zero(factor) || other.empty()) return;
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == entries_.end() || b->first < a->first) {
      merged.emplace_back(b->first, factor * b->second);
      ++b;
    } else {
      Rational v = a->second + factor * b->second;
      if (!is_zero(v)) merged.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
}

void SparseVector::scale(const Rational& factor) {
  if (is_zero(factor)) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.second *= factor;
}

Rational SparseVector::dot(const SparseVector& other) const {
  Rational sum = 0;
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() && b != other.entries_.end()) {
    if (a->first < b->first) {
      ++a;
    } else if (b->first < a->first) {
      ++b;
    } else {
      sum += a->second * b->second;
      ++a;
      ++b;
    }
  }
  return sum;
}

SparseVector EchelonBasis::reduce(SparseVector v) const {
  std::size_t pos = 0;
  while (pos < v.entries().size()) {
    const auto& [idx, value] = v.entries()[pos];
    auto it = pivot_row_.find(idx);
    if (it == pivot_row_.end()) {
      ++pos;
      continue;
    }
    Rational factor = -value;
    v.axpy(factor, rows_[it->second]);
  }
  return v;
}

bool EchelonBasis::insert(const SparseVector& v) {
  SparseVector r = reduce(v);
  if (r.empty()) return false;
  Rational inv = 1 / r.leading_value();
  r.scale(inv);
  pivot_row_.emplace(r.leading_index(), rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

std::vector<SparseVector> EchelonBasis::reduced_rows() const {
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return rows_[a].leading_index() > rows_[b].leading_index();
  });
  std::unordered_map<SparseVector::Index, SparseVector> done;
  std::vector<SparseVector> out;
  out.reserve(rows_.size());
  for (std::size_t k : order) {
    SparseVector row = rows_[k];
    const auto pivot = row.leading_index();
    std::size_t pos = 1;
    while (pos < row.entries().size()) {
      const auto& [idx, value] = row.entries()[pos];
      auto it = done.find(idx);
      if (it == done.end()) {
        ++pos;
        continue;
      }
      Rational factor = -value;
      row.axpy(factor, it->second);
    }
    done.emplace(pivot, row);
    out.push_back(std::move(row));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<SparseVector> EchelonBasis::nullspace(std::size_t num_vars) const {
  auto rref = reduced_rows();
  std::vector<bool> is_pivot(num_vars, false);
  for (const auto& r : rref) {
    if (r.leading_index() >= num_vars) throw std::out_of_range("nullspace: pivot beyond variable count");
    is_pivot[r.leading_index()] = true;
  }
  std::unordered_map<SparseVector::Index, std::vector<SparseVector::Entry>> columns;
  for (const auto& r : rref) {
    for (std::size_t k = 1; k < r.entries().size(); ++k) {
      const auto& [j, v] = r.entries()[k];
      columns[j].emplace_back(r.leading_index(), -v);
    }
  }
  std::vector<SparseVector> basis;
  for (std::size_t f = 0; f < num_vars; ++f) {
    if (is_pivot[f]) continue;
    auto entries = columns[static_cast<SparseVector::Index>(f)];
    entries.emplace_back(static_cast<SparseVector::Index>(f), 1);
    basis.emplace_back(std::move(entries));
  }
  return basis;
}

std::size_t rank_of(const std::vector<SparseVector>& vectors) {
  EchelonBasis basis;
  for (const auto& v : vectors) basis.insert(v);
  return basis.rank();
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m.rows_[i] = SparseVector({{static_cast<SparseVector::Index>(i), Rational(1)}});
  }
  return m;
}

SparseMatrix SparseMatrix::from_flat(std::size_t n, const SparseVector& flat) {
  SparseMatrix m(n);
  std::vector<std::vector<SparseVector::Entry>> rows(n);
  for (const auto& [idx, v] : flat.entries()) {
    rows[idx / n].emplace_back(static_cast<SparseVector::Index>(idx % n), v);
  }
  for (std::size_t i = 0; i < n; ++i) m.rows_[i] = SparseVector(std::move(rows[i]));
  return m;
}

Rational SparseMatrix::at(std::size_t i, std::size_t j) const {
  return rows_[i].at(static_cast<SparseVector::Index>(j));
}

std::size_t SparseMatrix::nnz() const {
  std::size_t total = 0;
  for (const auto& r : rows_) total += r.nnz();
  return total;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const SparseVector& r) { return r.empty(); });
}

bool SparseMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (const auto& [j, v] : rows_[i].entries()) {
      if (j != i) return false;
    }
  }
  return true;
}

void SparseMatrix::add_to(std::size_t i, std::size_t j, const Rational& value) {
  rows_[i].axpy(value, SparseVector({{static_cast<SparseVector::Index>(j), Rational(1)}}));
}

SparseVector SparseMatrix::flatten() const {
  std::vector<SparseVector::Entry> entries;
  entries.reserve(nnz());
  for_each([&](std::size_t i, std::size_t j, const Rational& v) {
    entries.emplace_back(static_cast<SparseVector::Index>(i * n_ + j), v);
  });
  return SparseVector(std::move(entries));
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<std::vector<SparseVector::Entry>> cols(n_);
  for_each([&](std::size_t i, std::size_t j, const Rational& v) {
    cols[j].emplace_back(static_cast<SparseVector::Index>(i), v);
  });
  SparseMatrix t(n_);
  for (std::size_t j = 0; j < n_; ++j) t.rows_[j] = SparseVector(std::move(cols[j]));
  return t;
}

Rational SparseMatrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += rows_[i].at(static_cast<SparseVector::Index>(i));
  return t;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  const std::size_t n = a.n_;
  SparseMatrix out(n);
  std::vector<Rational> acc(n);
  std::vector<char> touched(n, 0);
  std::vector<SparseVector::Index> touched_list;
  for (std::size_t i = 0; i < n; ++i) {
    touched_list.clear();
    for (const auto& [k, aik] : a.rows_[i].entries()) {
      for (const auto& [j, bkj] : b.rows_[k].entries()) {
        if (!touched[j]) {
          touched[j] = 1;
          touched_list.push_back(j);
          acc[j] = aik * bkj;
        } else {
          acc[j] += aik * bkj;
        }
      }
    }
    std::sort(touched_list.begin(), touched_list.end());
    std::vector<SparseVector::Entry> entries;
    entries.reserve(touched_list.size());
    for (auto j : touched_list) {
      touched[j] = 0;
      if (!is_zero(acc[j])) entries.emplace_back(j, acc[j]);
    }
    out.rows_[i] = SparseVector(std::move(entries));
  }
  return out;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  SparseMatrix out = a;
  for (std::size_t i = 0; i < a.n_; ++i) out.rows_[i].axpy(1, b.rows_[i]);
  return out;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  SparseMatrix out = a;
  for (std::size_t i = 0; i < a.n_; ++i) out.rows_[i].axpy(-1, b.rows_[i]);
  return out;
}

SparseMatrix operator*(const Rational& c, const SparseMatrix& a) {
  SparseMatrix out = a;
  for (auto& r : out.rows_) r.scale(c);
  return out;
}

SparseMatrix supercommutator(const SparseMatrix& a, const SparseMatrix& b, int sign) {
  SparseMatrix ab = a * b;
  SparseMatrix ba = b * a;
  return sign > 0 ? ab - ba : ab + ba;
}

Rational trace_of_product(const SparseMatrix& a, const SparseMatrix& b) {
  // tr(ab) = sum_{i,k} a_ik b_ki
  Rational t = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (const auto& [k, aik] : a.row(i).entries()) {
      t += aik * b.at(k, i);
    }
  }
  return t;
}

}  // namespace superschur
