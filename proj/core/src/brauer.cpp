#include "superschur/brauer.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace superschur::brauer {

namespace {

bool left_of_wall(std::size_t v, std::size_t strands, unsigned r) { return (v % strands) < r; }

}  // namespace

bool WalledDiagram::is_legal(unsigned r, unsigned s, const std::vector<std::uint8_t>& partner) {
  const std::size_t l = r + s;
  if (partner.size() != 2 * l) return false;
  for (std::size_t v = 0; v < partner.size(); ++v) {
    const std::size_t w = partner[v];
    if (w >= partner.size() || w == v || partner[w] != v) return false;
    const bool same_row = (v < l) == (w < l);
    const bool same_side = left_of_wall(v, l, r) == left_of_wall(w, l, r);
    if (same_row == same_side) return false;
  }
  return true;
}

WalledDiagram::WalledDiagram(unsigned r, unsigned s, std::vector<std::uint8_t> partner)
    : r_(r), s_(s), partner_(std::move(partner)) {
  if (r + s > 127) throw std::invalid_argument("WalledDiagram: too many strands");
  if (!is_legal(r, s, partner_)) throw std::invalid_argument("WalledDiagram: illegal matching");
}

WalledDiagram WalledDiagram::identity(unsigned r, unsigned s) {
  std::vector<std::size_t> perm(r + s);
  std::iota(perm.begin(), perm.end(), 0);
  return from_permutation(r, s, perm);
}

WalledDiagram WalledDiagram::from_permutation(unsigned r, unsigned s, const std::vector<std::size_t>& perm) {
  const std::size_t l = r + s;
  if (perm.size() != l) throw std::invalid_argument("from_permutation: wrong length");
  // Flipping the W side turns every legal edge into a top-to-bottom edge.
  auto new_top = [&](std::size_t t) { return t < r ? t : l + t; };
  auto new_bottom = [&](std::size_t b) { return b < r ? l + b : b; };
  std::vector<std::uint8_t> partner(2 * l, 0);
  std::vector<bool> seen(l, false);
  for (std::size_t t = 0; t < l; ++t) {
    if (perm[t] >= l || seen[perm[t]]) throw std::invalid_argument("from_permutation: not a permutation");
    seen[perm[t]] = true;
    const auto a = new_top(t);
    const auto b = new_bottom(perm[t]);
    partner[a] = static_cast<std::uint8_t>(b);
    partner[b] = static_cast<std::uint8_t>(a);
  }
  return {r, s, std::move(partner)};
}

WalledDiagram WalledDiagram::v_flip(unsigned r, unsigned s, unsigned i) {
  if (i + 1 >= r) throw std::invalid_argument("v_flip: index out of range");
  std::vector<std::size_t> perm(r + s);
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[i], perm[i + 1]);
  return from_permutation(r, s, perm);
}

WalledDiagram WalledDiagram::w_flip(unsigned r, unsigned s, unsigned j) {
  if (j + 1 >= s) throw std::invalid_argument("w_flip: index out of range");
  std::vector<std::size_t> perm(r + s);
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[r + j], perm[r + j + 1]);
  return from_permutation(r, s, perm);
}

WalledDiagram WalledDiagram::contraction(unsigned r, unsigned s) {
  if (r == 0 || s == 0) throw std::invalid_argument("contraction: needs r, s >= 1");
  const std::size_t l = r + s;
  std::vector<std::uint8_t> partner(2 * l);
  for (std::size_t t = 0; t < l; ++t) {
    partner[t] = static_cast<std::uint8_t>(l + t);
    partner[l + t] = static_cast<std::uint8_t>(t);
  }
  auto join = [&](std::size_t a, std::size_t b) {
    partner[a] = static_cast<std::uint8_t>(b);
    partner[b] = static_cast<std::uint8_t>(a);
  };
  join(r - 1, r);
  join(l + r - 1, l + r);
  return {r, s, std::move(partner)};
}

std::vector<std::size_t> WalledDiagram::to_permutation() const {
  const std::size_t l = strands();
  std::vector<std::size_t> perm(l);
  for (std::size_t t = 0; t < l; ++t) {
    const std::size_t v = t < r_ ? t : l + t;
    const std::size_t w = partner_[v];
    perm[t] = w >= l ? w - l : w;
  }
  return perm;
}

std::size_t WalledDiagram::cups() const {
  std::size_t count = 0;
  for (std::size_t t = 0; t < r_; ++t)
    if (partner_[t] < strands()) ++count;
  return count;
}

std::string WalledDiagram::to_string() const {
  std::ostringstream out;
  const std::size_t l = strands();
  out << "{";
  bool first = true;
  for (std::size_t v = 0; v < partner_.size(); ++v) {
    if (partner_[v] < v) continue;
    if (!first) out << ",";
    first = false;
    auto name = [&](std::size_t x) { return (x < l ? "t" : "b") + std::to_string(x % l + 1); };
    out << name(v) << "-" << name(partner_[v]);
  }
  out << "}";
  return out.str();
}

Concatenation concatenate(const WalledDiagram& d1, const WalledDiagram& d2) {
  if (d1.r() != d2.r() || d1.s() != d2.s()) throw std::invalid_argument("concatenate: shape mismatch");
  const std::size_t l = d1.strands();
  // Combined vertices: d1 uses 0..2l-1, d2 uses 2l..4l-1; d1 bottom l+i meets d2 top 2l+i.
  auto partner_of = [&](std::size_t x) {
    return x < 2 * l ? d1.partner(x) : 2 * l + d2.partner(x - 2 * l);
  };
  auto is_outer = [&](std::size_t x) { return x < l || x >= 3 * l; };
  auto to_result = [&](std::size_t x) { return x < l ? x : x - 2 * l; };
  std::vector<bool> middle_seen(l, false);
  std::vector<std::uint8_t> partner(2 * l);

  auto walk = [&](std::size_t start) {
    std::size_t x = start;
    while (true) {
      const std::size_t y = partner_of(x);
      if (is_outer(y)) return y;
      const std::size_t i = y < 2 * l ? y - l : y - 2 * l;
      middle_seen[i] = true;
      x = y < 2 * l ? 2 * l + i : l + i;
    }
  };
  for (std::size_t v = 0; v < l; ++v) {
    const std::size_t end = walk(v);
    partner[v] = static_cast<std::uint8_t>(to_result(end));
    partner[to_result(end)] = static_cast<std::uint8_t>(v);
  }
  for (std::size_t v = 3 * l; v < 4 * l; ++v) {
    const std::size_t end = walk(v);
    partner[to_result(v)] = static_cast<std::uint8_t>(to_result(end));
    partner[to_result(end)] = static_cast<std::uint8_t>(to_result(v));
  }
  unsigned loops = 0;
  for (std::size_t i = 0; i < l; ++i) {
    if (middle_seen[i]) continue;
    ++loops;
    std::size_t x = l + i;
    do {
      const std::size_t j = (x < 2 * l ? x - l : x - 2 * l);
      middle_seen[j] = true;
      const std::size_t y = partner_of(x);
      const std::size_t k = y < 2 * l ? y - l : y - 2 * l;
      middle_seen[k] = true;
      x = y < 2 * l ? 2 * l + k : l + k;
    } while (x != l + i && x != 2 * l + i);
  }
  return {WalledDiagram(d1.r(), d1.s(), std::move(partner)), loops};
}

BrauerElement BrauerElement::basis(const WalledDiagram& d, const Rational& delta) {
  BrauerElement e(delta);
  e.add(d, 1);
  return e;
}

Rational BrauerElement::coefficient(const WalledDiagram& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? Rational(0) : it->second;
}

void BrauerElement::add(const WalledDiagram& d, const Rational& c) {
  auto& slot = terms_.try_emplace(d, 0).first->second;
  slot += c;
  if (superschur::is_zero(slot)) terms_.erase(d);
}

BrauerElement operator*(const BrauerElement& a, const BrauerElement& b) {
  if (a.delta_ != b.delta_) throw std::invalid_argument("BrauerElement: loop parameters differ");
  BrauerElement out(a.delta_);
  for (const auto& [d1, c1] : a.terms_) {
    for (const auto& [d2, c2] : b.terms_) {
      auto [d, loops] = concatenate(d1, d2);
      Rational c = c1 * c2;
      for (unsigned k = 0; k < loops; ++k) c *= a.delta_;
      out.add(d, c);
    }
  }
  return out;
}

BrauerElement operator+(const BrauerElement& a, const BrauerElement& b) {
  if (a.delta_ != b.delta_) throw std::invalid_argument("BrauerElement: loop parameters differ");
  BrauerElement out = a;
  for (const auto& [d, c] : b.terms_) out.add(d, c);
  return out;
}

bool operator==(const BrauerElement& a, const BrauerElement& b) {
  return a.delta_ == b.delta_ && a.terms_ == b.terms_;
}

BrauerElement compose(const WalledDiagram& d1, const WalledDiagram& d2, const Rational& delta) {
  return BrauerElement::basis(d1, delta) * BrauerElement::basis(d2, delta);
}

std::vector<WalledDiagram> enumerate_diagrams(unsigned r, unsigned s, const ResourceLimits& limits) {
  const std::size_t l = r + s;
  std::size_t count = 1;
  for (std::size_t k = 2; k <= l; ++k) {
    count *= k;
    if (count > limits.max_diagrams) throw ResourceLimitExceeded("enumerate_diagrams: (r+s)! exceeds the bound");
  }
  std::vector<WalledDiagram> out;
  out.reserve(count);
  std::vector<std::size_t> perm(l);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    out.push_back(WalledDiagram::from_permutation(r, s, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<WalledDiagram> generator_diagrams(unsigned r, unsigned s) {
  std::vector<WalledDiagram> out;
  for (unsigned i = 0; i + 1 < r; ++i) out.push_back(WalledDiagram::v_flip(r, s, i));
  for (unsigned j = 0; j + 1 < s; ++j) out.push_back(WalledDiagram::w_flip(r, s, j));
  if (r > 0 && s > 0) out.push_back(WalledDiagram::contraction(r, s));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

SparseMatrix from_rows(std::vector<std::vector<SparseVector::Entry>> rows) {
  SparseMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (!rows[i].empty()) m.set_row(i, SparseVector(std::move(rows[i])));
  return m;
}

}  // namespace

SparseMatrix flip_matrix(const liealg::TensorSpace& space, std::size_t p) {
  if (p + 1 >= space.factors()) throw std::invalid_argument("flip_matrix: position out of range");
  const SuperDim dim = space.dim();
  std::vector<std::vector<SparseVector::Entry>> rows(space.size());
  for (std::size_t col = 0; col < space.size(); ++col) {
    auto t = space.decode(col);
    const int sign = KoszulContext::swap_sign(dim.parity(t[p]), dim.parity(t[p + 1]));
    std::swap(t[p], t[p + 1]);
    rows[space.encode(t)].emplace_back(static_cast<SparseVector::Index>(col), Rational(sign));
  }
  return from_rows(std::move(rows));
}

SparseMatrix contraction_matrix(const liealg::TensorSpace& space, const ContractionSigns& signs) {
  if (space.r() == 0 || space.s() == 0) throw std::invalid_argument("contraction_matrix: needs r, s >= 1");
  const SuperDim dim = space.dim();
  const std::size_t a = space.r() - 1;
  const std::size_t b = space.r();
  std::vector<std::vector<SparseVector::Entry>> rows(space.size());
  for (std::size_t col = 0; col < space.size(); ++col) {
    auto t = space.decode(col);
    if (t[a] != t[b]) continue;
    const int ev = dim.parity(t[a]) ? signs.ev_odd : signs.ev_even;
    for (std::size_t c = 0; c < dim.total(); ++c) {
      t[a] = t[b] = c;
      const int coev = dim.parity(c) ? signs.coev_odd : signs.coev_even;
      rows[space.encode(t)].emplace_back(static_cast<SparseVector::Index>(col), Rational(ev * coev));
    }
  }
  return from_rows(std::move(rows));
}

ContractionSigns find_contraction_signs(SuperDim dim) {
  if (dim.total() == 0) return {};
  const liealg::TensorSpace space(dim, 1, 1);
  const auto reps = liealg::rho_rs(dim, 1, 1);
  const Rational delta = static_cast<long>(dim.m) - static_cast<long>(dim.n);
  for (unsigned code = 0; code < 16; ++code) {
    // Odd signs vary first; at m = n the overall sign of e is otherwise undetermined.
    ContractionSigns signs{(code & 4) ? -1 : 1, (code & 1) ? -1 : 1, (code & 8) ? -1 : 1, (code & 2) ? -1 : 1};
    const SparseMatrix e = contraction_matrix(space, signs);
    if (!(e * e == delta * e)) continue;
    const bool commutes = std::all_of(reps.matrices.begin(), reps.matrices.end(),
                                      [&](const SparseMatrix& g) { return e * g == g * e; });
    if (commutes) return signs;
  }
  throw VerificationFailure("find_contraction_signs: no sign choice makes the contraction a module map");
}

BrauerAction::BrauerAction(SuperDim dim, unsigned r, unsigned s, const ResourceLimits& limits)
    : space_(dim, r, s), signs_(find_contraction_signs(dim)), diagrams_(enumerate_diagrams(r, s, limits)) {
  if (space_.size() > limits.max_ambient_entries) {
    throw ResourceLimitExceeded("BrauerAction: tensor space dimension exceeds the configured bound");
  }
  std::vector<std::pair<WalledDiagram, SparseMatrix>> gens;
  for (unsigned i = 0; i + 1 < r; ++i) gens.emplace_back(WalledDiagram::v_flip(r, s, i), flip_matrix(space_, i));
  for (unsigned j = 0; j + 1 < s; ++j)
    gens.emplace_back(WalledDiagram::w_flip(r, s, j), flip_matrix(space_, r + j));
  if (r > 0 && s > 0) gens.emplace_back(WalledDiagram::contraction(r, s), contraction_matrix(space_, signs_));

  // Breadth-first search over loop-free words.
  const WalledDiagram id = WalledDiagram::identity(r, s);
  matrices_.emplace(id, SparseMatrix::identity(space_.size()));
  std::deque<WalledDiagram> queue{id};
  while (!queue.empty()) {
    const WalledDiagram d = queue.front();
    queue.pop_front();
    for (const auto& [g, gm] : gens) {
      auto [next, loops] = concatenate(g, d);
      if (loops != 0 || matrices_.count(next)) continue;
      matrices_.emplace(next, gm * matrices_.at(d));
      queue.push_back(next);
    }
  }
  if (matrices_.size() != diagrams_.size()) {
    throw VerificationFailure("BrauerAction: generators did not reach every diagram");
  }
}

Rational BrauerAction::delta() const {
  return Rational(static_cast<long>(space_.dim().m)) - Rational(static_cast<long>(space_.dim().n));
}

const SparseMatrix& BrauerAction::act(const WalledDiagram& d) const {
  auto it = matrices_.find(d);
  if (it == matrices_.end()) throw std::invalid_argument("BrauerAction::act: diagram of a different shape");
  return it->second;
}

std::vector<SparseMatrix> BrauerAction::matrices() const {
  std::vector<SparseMatrix> out;
  out.reserve(diagrams_.size());
  for (const auto& d : diagrams_) out.push_back(act(d));
  return out;
}

SparseMatrix BrauerAction::act(const BrauerElement& x) const {
  SparseMatrix out(space_.size());
  for (const auto& [d, c] : x.terms()) out = out + c * act(d);
  return out;
}

SparseMatrix BrauerAction::permutation_action(const std::vector<std::size_t>& top_to_bottom) const {
  std::vector<std::vector<SparseVector::Entry>> rows(space_.size());
  for (std::size_t col = 0; col < space_.size(); ++col) {
    const auto in = space_.decode(col);
    std::vector<std::size_t> out(in.size());
    for (std::size_t t = 0; t < in.size(); ++t) out[t] = in[top_to_bottom[t]];
    const int sign = KoszulContext(space_.parities(in)).permutation_sign(top_to_bottom);
    rows[space_.encode(out)].emplace_back(static_cast<SparseVector::Index>(col), Rational(sign));
  }
  return from_rows(std::move(rows));
}

SparseMatrix BrauerAction::nested_contraction(std::size_t k) const {
  const SuperDim dim = space_.dim();
  const std::size_t r = space_.r();
  std::vector<std::vector<SparseVector::Entry>> rows(space_.size());
  for (std::size_t col = 0; col < space_.size(); ++col) {
    auto t = space_.decode(col);
    int ev = 1;
    bool matched = true;
    for (std::size_t j = 1; j <= k; ++j) {
      if (t[r - j] != t[r - 1 + j]) {
        matched = false;
        break;
      }
      ev *= dim.parity(t[r - j]) ? signs_.ev_odd : signs_.ev_even;
    }
    if (!matched) continue;
    // Sum over the k inserted index pairs.
    std::vector<std::size_t> c(k, 0);
    while (true) {
      int coev = 1;
      for (std::size_t j = 1; j <= k; ++j) {
        t[r - j] = t[r - 1 + j] = c[j - 1];
        coev *= dim.parity(c[j - 1]) ? signs_.coev_odd : signs_.coev_even;
      }
      rows[space_.encode(t)].emplace_back(static_cast<SparseVector::Index>(col), Rational(ev * coev));
      std::size_t pos = 0;
      while (pos < k && ++c[pos] == dim.total()) c[pos++] = 0;
      if (pos == k) break;
    }
  }
  return from_rows(std::move(rows));
}

SparseMatrix BrauerAction::direct_action(const WalledDiagram& d) const {
  const std::size_t l = d.strands();
  const std::size_t r = d.r();
  if (d.r() != space_.r() || d.s() != space_.s()) throw std::invalid_argument("direct_action: shape mismatch");
  const std::size_t k = d.cups();

  std::vector<std::size_t> top(l);
  std::vector<std::size_t> bottom(l);
  // Top row: caps go to the nested positions, through-strands fill the rest in order.
  std::size_t j = 0;
  std::size_t next_v = 0;
  std::size_t next_w = r + k;
  for (std::size_t t = 0; t < l; ++t) {
    const std::size_t p = d.partner(t);
    if (p < l) {
      if (t < r) {
        ++j;
        top[t] = r - j;
        top[p] = r - 1 + j;
      }
    } else {
      top[t] = t < r ? next_v++ : next_w++;
    }
  }
  // Bottom permutation: nested position u continues to bottom vertex bottom[u].
  for (std::size_t t = 0; t < l; ++t) {
    const std::size_t p = d.partner(t);
    if (p >= l) bottom[top[t]] = p - l;
  }
  j = 0;
  for (std::size_t b = 0; b < r; ++b) {
    const std::size_t p = d.partner(l + b);
    if (p >= l) {
      ++j;
      bottom[r - j] = b;
      bottom[r - 1 + j] = p - l;
    }
  }
  return permutation_action(top) * nested_contraction(k) * permutation_action(bottom);
}

SparseMatrix act_on_T(const WalledDiagram& d, SuperDim dim, const ResourceLimits& limits) {
  return BrauerAction(dim, d.r(), d.s(), limits).act(d);
}

centralizer::MatrixSubalgebra image_algebra_brauer(const BrauerAction& action, const ResourceLimits& limits) {
  const auto& sp = action.space();
  const auto cartan = liealg::rho_rs(sp.dim(), sp.r(), sp.s(), limits).cartan();
  return centralizer::span_algebra(sp.size(), action.matrices(), cartan, limits);
}

centralizer::MatrixSubalgebra image_algebra_brauer(unsigned r, unsigned s, SuperDim dim,
                                                   const ResourceLimits& limits) {
  return image_algebra_brauer(BrauerAction(dim, r, s, limits), limits);
}

}  // namespace superschur::brauer
