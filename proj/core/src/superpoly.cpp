#include "superschur/superpoly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "superschur/grassmann.hpp"
#include "superschur/sparse.hpp"

namespace superschur::superpoly {

unsigned Monomial::degree() const {
  unsigned total = static_cast<unsigned>(std::popcount(odd));
  for (auto e : exponents) total += e;
  return total;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto e : m.exponents) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  h ^= m.odd + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return static_cast<std::size_t>(h);
}

std::pair<int, Monomial> multiply(const Monomial& a, const Monomial& b) {
  if (a.odd & b.odd) return {0, Monomial{}};
  int swaps = 0;
  for (std::uint64_t rest = b.odd; rest != 0; rest &= rest - 1) {
    const int q = std::countr_zero(rest);
    swaps += std::popcount(q == 63 ? 0 : (a.odd >> (q + 1)));
  }
  Monomial out;
  out.odd = a.odd | b.odd;
  for (std::size_t g = 0; g < kMaxGenerators; ++g) {
    const unsigned e = unsigned{a.exponents[g]} + unsigned{b.exponents[g]};
    if (e > 255) throw std::overflow_error("Monomial exponent exceeds 255");
    out.exponents[g] = static_cast<std::uint8_t>(e);
  }
  return {(swaps & 1) ? -1 : 1, out};
}

SuperPolynomial SuperPolynomial::constant(const Rational& c) {
  return from_monomial(Monomial{}, c);
}

SuperPolynomial SuperPolynomial::from_monomial(const Monomial& m, const Rational& c) {
  SuperPolynomial p;
  if (!superschur::is_zero(c)) p.terms_.emplace_back(m, c);
  return p;
}

SuperPolynomial SuperPolynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  SuperPolynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(p.terms_, [](const Term& t) { return superschur::is_zero(t.second); });
  return p;
}

bool SuperPolynomial::is_homogeneous(int parity) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.first.parity() == (parity & 1); });
}

SuperPolynomial SuperPolynomial::body() const {
  SuperPolynomial p;
  for (const auto& t : terms_)
    if (t.first.odd == 0) p.terms_.push_back(t);
  return p;
}

Rational SuperPolynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.first < key; });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

namespace {

SuperPolynomial merge(const SuperPolynomial& a, const SuperPolynomial& b, int sign_b) {
  std::vector<SuperPolynomial::Term> out;
  out.reserve(a.size() + b.size());
  auto x = a.terms().begin();
  auto y = b.terms().begin();
  while (x != a.terms().end() || y != b.terms().end()) {
    if (y == b.terms().end() || (x != a.terms().end() && x->first < y->first)) {
      out.push_back(*x++);
    } else if (x == a.terms().end() || y->first < x->first) {
      out.emplace_back(y->first, sign_b > 0 ? y->second : Rational(-y->second));
      ++y;
    } else {
      Rational c = sign_b > 0 ? Rational(x->second + y->second) : Rational(x->second - y->second);
      if (!superschur::is_zero(c)) out.emplace_back(x->first, std::move(c));
      ++x;
      ++y;
    }
  }
  // Already sorted and merged.
  return SuperPolynomial::from_terms(std::move(out));
}

}  // namespace

SuperPolynomial operator+(const SuperPolynomial& a, const SuperPolynomial& b) { return merge(a, b, 1); }
SuperPolynomial operator-(const SuperPolynomial& a, const SuperPolynomial& b) { return merge(a, b, -1); }

SuperPolynomial operator-(const SuperPolynomial& a) {
  SuperPolynomial out = a;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

SuperPolynomial operator*(const Rational& c, const SuperPolynomial& a) {
  if (superschur::is_zero(c)) return {};
  SuperPolynomial out = a;
  for (auto& t : out.terms_) t.second *= c;
  return out;
}

SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      auto [sign, m] = multiply(ma, mb);
      if (sign == 0) continue;
      auto [it, inserted] = acc.try_emplace(m);
      if (sign > 0) {
        it->second += ca * cb;
      } else {
        it->second -= ca * cb;
      }
    }
  }
  std::vector<SuperPolynomial::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!superschur::is_zero(c)) terms.emplace_back(m, std::move(c));
  return SuperPolynomial::from_terms(std::move(terms));
}

SuperPolynomial pow(const SuperPolynomial& p, unsigned k) {
  SuperPolynomial out = SuperPolynomial::constant(1);
  for (unsigned i = 0; i < k; ++i) out = out * p;
  return out;
}

// ---------------------------------------------------------------------------
// CoordinateRing

namespace {

// Leibniz expansion over the index block [lo, lo+size) of the generic matrix.
SuperPolynomial block_determinant(const CoordinateRing& ring, std::size_t lo, std::size_t size) {
  std::vector<std::size_t> perm(size);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<SuperPolynomial::Term> terms;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < size; ++a)
      for (std::size_t b = a + 1; b < size; ++b)
        if (perm[a] > perm[b]) ++inversions;
    Monomial mono;
    for (std::size_t a = 0; a < size; ++a) {
      mono.exponents[ring.generator_index(lo + a, lo + perm[a])] += 1;
    }
    terms.emplace_back(mono, Rational((inversions & 1) ? -1 : 1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return SuperPolynomial::from_terms(std::move(terms));
}

}  // namespace

RingPtr CoordinateRing::create(SuperDim dim) {
  if (dim.total() * dim.total() > kMaxGenerators) {
    throw std::invalid_argument("CoordinateRing: (m+n)^2 must not exceed 64");
  }
  return RingPtr(new CoordinateRing(dim));
}

CoordinateRing::CoordinateRing(SuperDim dim) : dim_(dim) {
  d1_ = block_determinant(*this, 0, dim.m);
  d2_ = block_determinant(*this, dim.m, dim.n);
  d1_powers_.push_back(SuperPolynomial::constant(1));
  d2_powers_.push_back(SuperPolynomial::constant(1));
}

std::size_t CoordinateRing::generator_index(std::size_t i, std::size_t j) const {
  if (i >= size() || j >= size()) throw std::out_of_range("generator index out of range");
  return i * size() + j;
}

SuperPolynomial CoordinateRing::x(std::size_t i, std::size_t j) const {
  Monomial mono;
  const auto g = generator_index(i, j);
  if (generator_parity(i, j)) {
    mono.odd = std::uint64_t{1} << g;
  } else {
    mono.exponents[g] = 1;
  }
  return SuperPolynomial::from_monomial(mono);
}

SuperPolynomial CoordinateRing::d1_power(unsigned k) const {
  std::lock_guard lock(cache_mutex_);
  while (d1_powers_.size() <= k) d1_powers_.push_back(d1_powers_.back() * d1_);
  return d1_powers_[k];
}

SuperPolynomial CoordinateRing::d2_power(unsigned k) const {
  std::lock_guard lock(cache_mutex_);
  while (d2_powers_.size() <= k) d2_powers_.push_back(d2_powers_.back() * d2_);
  return d2_powers_[k];
}

Weight CoordinateRing::weight(const Monomial& m) const {
  const std::size_t n = size();
  Weight w(2 * n, 0);
  for (std::size_t g = 0; g < n * n; ++g) {
    int e = m.exponents[g] + static_cast<int>((m.odd >> g) & 1U);
    if (e == 0) continue;
    w[g / n] += e;
    w[n + g % n] += e;
  }
  return w;
}

Weight CoordinateRing::d1_weight() const {
  Weight w(2 * size(), 0);
  for (std::size_t i = 0; i < dim_.m; ++i) {
    w[i] = 1;
    w[size() + i] = 1;
  }
  return w;
}

Weight CoordinateRing::d2_weight() const {
  Weight w(2 * size(), 0);
  for (std::size_t i = dim_.m; i < size(); ++i) {
    w[i] = 1;
    w[size() + i] = 1;
  }
  return w;
}

Rational CoordinateRing::counit(const SuperPolynomial& p) const {
  Rational total = 0;
  for (const auto& [mono, c] : p.terms()) {
    if (mono.odd != 0) continue;
    bool diagonal = true;
    for (std::size_t g = 0; g < generator_count() && diagonal; ++g) {
      if (mono.exponents[g] != 0 && g / size() != g % size()) diagonal = false;
    }
    if (diagonal) total += c;
  }
  return total;
}

// ---------------------------------------------------------------------------
// LocalizedElement

LocalizedElement::LocalizedElement(RingPtr ring, SuperPolynomial numerator, unsigned d1_power,
                                   unsigned d2_power)
    : ring_(std::move(ring)), numerator_(std::move(numerator)), a_(d1_power), b_(d2_power) {
  if (!ring_) throw std::invalid_argument("LocalizedElement: null ring");
  if (numerator_.is_zero()) a_ = b_ = 0;
}

LocalizedElement LocalizedElement::generator(const RingPtr& ring, std::size_t i, std::size_t j) {
  return {ring, ring->x(i, j)};
}

LocalizedElement LocalizedElement::constant(const RingPtr& ring, const Rational& c) {
  return {ring, SuperPolynomial::constant(c)};
}

LocalizedElement LocalizedElement::with_exponents(const RingPtr& ring, const SuperPolynomial& numerator,
                                                  int e1, int e2) {
  SuperPolynomial num = numerator;
  unsigned a = 0;
  unsigned b = 0;
  if (e1 >= 0) {
    if (e1 > 0) num = num * ring->d1_power(static_cast<unsigned>(e1));
  } else {
    a = static_cast<unsigned>(-e1);
  }
  if (e2 >= 0) {
    if (e2 > 0) num = num * ring->d2_power(static_cast<unsigned>(e2));
  } else {
    b = static_cast<unsigned>(-e2);
  }
  return {ring, std::move(num), a, b};
}

LocalizedElement LocalizedElement::rescaled(unsigned a, unsigned b) const {
  if (a < a_ || b < b_) throw std::invalid_argument("LocalizedElement::rescaled: cannot lower denominator");
  if (is_zero()) return *this;
  SuperPolynomial num = numerator_;
  if (a > a_) num = num * ring_->d1_power(a - a_);
  if (b > b_) num = num * ring_->d2_power(b - b_);
  LocalizedElement out(ring_, std::move(num), a, b);
  return out;
}

Rational LocalizedElement::counit() const { return ring_->counit(numerator_); }

namespace {

void check_same_ring(const LocalizedElement& u, const LocalizedElement& v) {
  if (u.ring().get() != v.ring().get()) throw std::invalid_argument("LocalizedElement: operands from different rings");
}

}  // namespace

LocalizedElement operator+(const LocalizedElement& u, const LocalizedElement& v) {
  check_same_ring(u, v);
  if (u.is_zero()) return v;
  if (v.is_zero()) return u;
  const unsigned a = std::max(u.a_, v.a_);
  const unsigned b = std::max(u.b_, v.b_);
  return {u.ring_, u.rescaled(a, b).numerator_ + v.rescaled(a, b).numerator_, a, b};
}

LocalizedElement operator-(const LocalizedElement& u, const LocalizedElement& v) { return u + (-v); }

LocalizedElement operator-(const LocalizedElement& u) { return {u.ring_, -u.numerator_, u.a_, u.b_}; }

LocalizedElement operator*(const LocalizedElement& u, const LocalizedElement& v) {
  check_same_ring(u, v);
  return {u.ring_, u.numerator_ * v.numerator_, u.a_ + v.a_, u.b_ + v.b_};
}

bool operator==(const LocalizedElement& u, const LocalizedElement& v) { return (u - v).is_zero(); }

std::optional<LocalizedElement> try_invert(const LocalizedElement& u) {
  const RingPtr& ring = u.ring();
  const SuperPolynomial body = u.numerator().body();
  if (body.is_zero()) return std::nullopt;
  const SuperDim dim = ring->dim();
  const Monomial& lead = body.terms().front().first;
  const unsigned deg = lead.degree();

  std::vector<std::pair<unsigned, unsigned>> candidates;
  if (dim.m == 0 && dim.n == 0) {
    candidates.emplace_back(0, 0);
  } else if (dim.n == 0) {
    if (deg % dim.m == 0) candidates.emplace_back(deg / dim.m, 0);
  } else if (dim.m == 0) {
    if (deg % dim.n == 0) candidates.emplace_back(0, deg / dim.n);
  } else {
    for (unsigned p = 0; p * dim.m <= deg; ++p) {
      const unsigned rest = deg - p * static_cast<unsigned>(dim.m);
      if (rest % dim.n == 0) candidates.emplace_back(p, rest / static_cast<unsigned>(dim.n));
    }
  }

  for (auto [p, q] : candidates) {
    const SuperPolynomial unit = ring->d1_power(p) * ring->d2_power(q);
    const Rational unit_lead = unit.coefficient(lead);
    if (superschur::is_zero(unit_lead)) continue;
    const Rational c = body.terms().front().second / unit_lead;
    if (!(c * unit == body)) continue;

    const SuperPolynomial nil = u.numerator() - body;
    const int a = static_cast<int>(u.d1_power());
    const int b = static_cast<int>(u.d2_power());
    LocalizedElement sum = u.zero();
    SuperPolynomial nil_power = SuperPolynomial::constant(1);
    Rational c_inv_power = 1 / c;
    for (int k = 0; !nil_power.is_zero(); ++k) {
      SuperPolynomial term = (k & 1) ? -(c_inv_power * nil_power) : c_inv_power * nil_power;
      sum = sum + LocalizedElement::with_exponents(ring, term, a - static_cast<int>(p) * (k + 1),
                                                   b - static_cast<int>(q) * (k + 1));
      nil_power = nil_power * nil;
      c_inv_power /= c;
    }
    return sum;
  }
  return std::nullopt;
}

Inverter<LocalizedElement> unit_oracle() {
  return [](const LocalizedElement& u) { return try_invert(u); };
}

SuperMatrix<LocalizedElement> generic_matrix(const RingPtr& ring) {
  const std::size_t n = ring->size();
  Matrix<LocalizedElement> x(n, n, LocalizedElement::constant(ring, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) x(i, j) = LocalizedElement::generator(ring, i, j);
  return SuperMatrix<LocalizedElement>(ring->dim(), std::move(x));
}

Matrix<LocalizedElement> generic_inverse(const RingPtr& ring) {
  return block_invert(generic_matrix(ring), unit_oracle()).entries();
}

SuperMatrix<LocalizedElement> unit_row_replacement(const RingPtr& ring, std::size_t i, std::size_t j) {
  Matrix<LocalizedElement> d = generic_matrix(ring).entries();
  if (i >= d.rows() || j >= d.cols()) throw std::out_of_range("unit_row_replacement: index out of range");
  for (std::size_t c = 0; c < d.cols(); ++c) d(i, c) = LocalizedElement::constant(ring, c == j ? 1 : 0);
  return SuperMatrix<LocalizedElement>(ring->dim(), std::move(d));
}

LocalizedElement berezinian_minor(const RingPtr& ring, std::size_t i, std::size_t j) {
  return berezinian(unit_row_replacement(ring, i, j), unit_oracle());
}

LocalizedElement berezinian_star_minor(const RingPtr& ring, std::size_t i, std::size_t j) {
  return berezinian_star(unit_row_replacement(ring, i, j), unit_oracle());
}

namespace {

LocalizedElement cramer_quotient(const RingPtr& ring, std::size_t row, std::size_t col) {
  const auto oracle = unit_oracle();
  const auto x = generic_matrix(ring);
  if (row < ring->dim().m) {
    return berezinian_minor(ring, row, col) * require_inverse(oracle, berezinian(x, oracle), "Ber");
  }
  return berezinian_star_minor(ring, row, col) * require_inverse(oracle, berezinian_star(x, oracle), "Ber*");
}

}  // namespace

LocalizedElement cramer_entry(const RingPtr& ring, std::size_t i, std::size_t j) {
  return cramer_quotient(ring, j, i);
}

LocalizedElement cramer_entry_row_convention(const RingPtr& ring, std::size_t i, std::size_t j) {
  return cramer_quotient(ring, i, j);
}

// ---------------------------------------------------------------------------
// TensorSquareElement

TensorSquareElement::TensorSquareElement(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("TensorSquareElement: null ring");
}

std::vector<TensorSquareElement::Term> TensorSquareElement::canonical(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const Term& t) { return superschur::is_zero(t.second); });
  return out;
}

TensorSquareElement TensorSquareElement::tensor(const LocalizedElement& left, const LocalizedElement& right) {
  check_same_ring(left, right);
  TensorSquareElement out(left.ring());
  std::vector<Term> terms;
  terms.reserve(left.numerator().size() * right.numerator().size());
  for (const auto& [ml, cl] : left.numerator().terms())
    for (const auto& [mr, cr] : right.numerator().terms()) terms.emplace_back(Key{ml, mr}, cl * cr);
  out.terms_ = canonical(std::move(terms));
  out.powers_ = {left.d1_power(), left.d2_power(), right.d1_power(), right.d2_power()};
  if (out.terms_.empty()) out.powers_ = {};
  return out;
}

TensorSquareElement TensorSquareElement::one(const RingPtr& ring) {
  return tensor(LocalizedElement::constant(ring, 1), LocalizedElement::constant(ring, 1));
}

bool TensorSquareElement::is_homogeneous(int parity) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) {
    return ((t.first.first.parity() + t.first.second.parity()) & 1) == (parity & 1);
  });
}

TensorSquareElement TensorSquareElement::rescaled(const std::array<unsigned, 4>& powers) const {
  for (std::size_t k = 0; k < 4; ++k)
    if (powers[k] < powers_[k]) throw std::invalid_argument("TensorSquareElement::rescaled: cannot lower denominator");
  if (is_zero() || powers == powers_) {
    TensorSquareElement out = *this;
    if (!is_zero()) out.powers_ = powers;
    return out;
  }
  // Denominator factors are even, so they multiply each side without signs.
  const SuperPolynomial left = ring_->d1_power(powers[0] - powers_[0]) * ring_->d2_power(powers[1] - powers_[1]);
  const SuperPolynomial right = ring_->d1_power(powers[2] - powers_[2]) * ring_->d2_power(powers[3] - powers_[3]);
  std::vector<Term> terms;
  terms.reserve(terms_.size() * left.size() * right.size());
  for (const auto& [key, c] : terms_) {
    for (const auto& [fl, cl] : left.terms()) {
      const Monomial ml = multiply(key.first, fl).second;
      for (const auto& [fr, cr] : right.terms()) {
        terms.emplace_back(Key{ml, multiply(key.second, fr).second}, c * cl * cr);
      }
    }
  }
  TensorSquareElement out(ring_);
  out.terms_ = canonical(std::move(terms));
  out.powers_ = powers;
  return out;
}

namespace {

std::array<unsigned, 4> max_powers(const std::array<unsigned, 4>& a, const std::array<unsigned, 4>& b) {
  return {std::max(a[0], b[0]), std::max(a[1], b[1]), std::max(a[2], b[2]), std::max(a[3], b[3])};
}

}  // namespace

TensorSquareElement operator+(const TensorSquareElement& u, const TensorSquareElement& v) {
  if (u.ring_.get() != v.ring_.get()) throw std::invalid_argument("TensorSquareElement: different rings");
  if (u.is_zero()) return v;
  if (v.is_zero()) return u;
  const auto powers = max_powers(u.powers_, v.powers_);
  const auto ur = u.rescaled(powers);
  const auto vr = v.rescaled(powers);
  std::vector<TensorSquareElement::Term> terms = ur.terms_;
  terms.insert(terms.end(), vr.terms_.begin(), vr.terms_.end());
  TensorSquareElement out(u.ring_);
  out.terms_ = TensorSquareElement::canonical(std::move(terms));
  out.powers_ = out.terms_.empty() ? std::array<unsigned, 4>{} : powers;
  return out;
}

TensorSquareElement operator-(const TensorSquareElement& u) {
  TensorSquareElement out = u;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

TensorSquareElement operator-(const TensorSquareElement& u, const TensorSquareElement& v) { return u + (-v); }

TensorSquareElement operator*(const TensorSquareElement& u, const TensorSquareElement& v) {
  if (u.ring_.get() != v.ring_.get()) throw std::invalid_argument("TensorSquareElement: different rings");
  TensorSquareElement out(u.ring_);
  if (u.is_zero() || v.is_zero()) return out;
  std::vector<TensorSquareElement::Term> terms;
  terms.reserve(u.terms_.size() * v.terms_.size());
  for (const auto& [ku, cu] : u.terms_) {
    for (const auto& [kv, cv] : v.terms_) {
      auto [sl, ml] = multiply(ku.first, kv.first);
      if (sl == 0) continue;
      auto [sr, mr] = multiply(ku.second, kv.second);
      if (sr == 0) continue;
      int sign = sl * sr;
      if (ku.second.parity() & kv.first.parity()) sign = -sign;
      terms.emplace_back(TensorSquareElement::Key{ml, mr}, sign > 0 ? cu * cv : Rational(-(cu * cv)));
    }
  }
  out.terms_ = TensorSquareElement::canonical(std::move(terms));
  if (!out.terms_.empty()) {
    out.powers_ = {u.powers_[0] + v.powers_[0], u.powers_[1] + v.powers_[1], u.powers_[2] + v.powers_[2],
                   u.powers_[3] + v.powers_[3]};
  }
  return out;
}

bool operator==(const TensorSquareElement& u, const TensorSquareElement& v) { return (u - v).is_zero(); }

TensorSquareElement delta_generator(const RingPtr& ring, std::size_t i, std::size_t j) {
  TensorSquareElement sum(ring);
  for (std::size_t k = 0; k < ring->size(); ++k) {
    sum = sum + TensorSquareElement::tensor(LocalizedElement::generator(ring, i, k),
                                            LocalizedElement::generator(ring, k, j));
  }
  return sum;
}

TensorSquareElement delta_inverse_formula(const RingPtr& ring, const Matrix<LocalizedElement>& inverse,
                                          std::size_t i, std::size_t j) {
  const SuperDim dim = ring->dim();
  TensorSquareElement sum(ring);
  for (std::size_t k = 0; k < ring->size(); ++k) {
    const int exponent = ((dim.parity(i) + dim.parity(k)) & 1) * ((dim.parity(k) + dim.parity(j)) & 1);
    auto term = TensorSquareElement::tensor(inverse(k, j), inverse(i, k));
    sum = exponent ? sum - term : sum + term;
  }
  return sum;
}

std::vector<TensorSquareElement> coproduct_products(const RingPtr& ring, const Matrix<LocalizedElement>& inverse,
                                                   bool inverse_first) {
  const SuperDim dim = ring->dim();
  const std::size_t size = ring->size();
  auto p = [&](std::size_t a) { return dim.parity(a); };
  auto x = [&](std::size_t a, std::size_t b) { return LocalizedElement::generator(ring, a, b); };

  // The sum over the middle index k lands in one tensor factor and depends on the
  // outer index (j for A C, i for C A) only through its parity q.
  struct Inner {
    LocalizedElement value;
    std::optional<Rational> constant;
  };
  std::map<std::tuple<std::size_t, std::size_t, int>, Inner> inners;
  auto inner_sum = [&](std::size_t l, std::size_t h, int q) -> const Inner& {
    const auto key = std::make_tuple(l, h, q);
    if (auto it = inners.find(key); it != inners.end()) return it->second;
    LocalizedElement sum = LocalizedElement::constant(ring, 0);
    for (std::size_t k = 0; k < size; ++k) {
      int exponent = 0;
      LocalizedElement term = sum;
      if (!inverse_first) {
        // (x_il ⊗ x_lk) * s(k,h,j) (x~_hj ⊗ x~_kh)
        exponent = ((p(k) + p(h)) * (p(h) + q) + (p(l) + p(k)) * (p(h) + q)) & 1;
        term = x(l, k) * inverse(k, h);
      } else {
        // s(i,h,k) (x~_hk ⊗ x~_ih) * (x_kl ⊗ x_lj)
        exponent = ((q + p(h)) * (p(h) + p(k)) + (q + p(h)) * (p(k) + p(l))) & 1;
        term = inverse(h, k) * x(k, l);
      }
      sum = exponent ? sum - term : sum + term;
    }
    Inner out{sum, std::nullopt};
    if (const auto c = LocalizedElement::constant(ring, sum.counit()); c == sum) out.constant = sum.counit();
    return inners.emplace(key, std::move(out)).first->second;
  };

  const auto one = LocalizedElement::constant(ring, 1);
  std::vector<TensorSquareElement> out;
  out.reserve(size * size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      TensorSquareElement sum(ring);
      // Terms with a constant k-sum c contribute c * outer ⊗ 1 (or 1 ⊗ c * outer).
      LocalizedElement scalar_part = LocalizedElement::constant(ring, 0);
      for (std::size_t l = 0; l < size; ++l) {
        for (std::size_t h = 0; h < size; ++h) {
          const Inner& inner = inner_sum(l, h, inverse_first ? p(i) : p(j));
          if (inner.constant && superschur::is_zero(*inner.constant)) continue;
          const LocalizedElement outer = inverse_first ? inverse(i, h) * x(l, j) : x(i, l) * inverse(h, j);
          if (inner.constant) {
            scalar_part = scalar_part + LocalizedElement::constant(ring, *inner.constant) * outer;
          } else {
            sum = inverse_first ? sum + TensorSquareElement::tensor(inner.value, outer)
                                : sum + TensorSquareElement::tensor(outer, inner.value);
          }
        }
      }
      if (const auto c = LocalizedElement::constant(ring, scalar_part.counit()); c == scalar_part) scalar_part = c;
      out.push_back(inverse_first ? sum + TensorSquareElement::tensor(one, scalar_part)
                                  : sum + TensorSquareElement::tensor(scalar_part, one));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Formal structure-map checks

namespace {

int counit_of(const GeneratorSymbol& g) { return g.i == g.j ? 1 : 0; }

void add_word(FormalTensor& t, std::vector<GeneratorSymbol> word, int c) {
  if (c == 0) return;
  auto& slot = t[std::move(word)];
  slot += c;
}

void drop_zeros(FormalTensor& t) {
  std::erase_if(t, [](const auto& kv) { return kv.second == 0; });
}

}  // namespace

FormalTensor formal_delta(SuperDim dim, const GeneratorSymbol& g) {
  FormalTensor out;
  for (std::size_t k = 0; k < dim.total(); ++k) {
    if (!g.inverse) {
      add_word(out, {{false, g.i, k}, {false, k, g.j}}, 1);
    } else {
      const int exponent = ((dim.parity(g.i) + dim.parity(k)) & 1) * ((dim.parity(k) + dim.parity(g.j)) & 1);
      add_word(out, {{true, k, g.j}, {true, g.i, k}}, exponent ? -1 : 1);
    }
  }
  drop_zeros(out);
  return out;
}

namespace {

template <class F>
void for_each_generator(SuperDim dim, F&& f) {
  for (bool inv : {false, true})
    for (std::size_t i = 0; i < dim.total(); ++i)
      for (std::size_t j = 0; j < dim.total(); ++j) f(GeneratorSymbol{inv, i, j});
}

}  // namespace

bool check_coassociativity(SuperDim dim) {
  bool ok = true;
  for_each_generator(dim, [&](const GeneratorSymbol& g) {
    FormalTensor left;
    FormalTensor right;
    for (const auto& [word, c] : formal_delta(dim, g)) {
      for (const auto& [inner, c2] : formal_delta(dim, word[0])) add_word(left, {inner[0], inner[1], word[1]}, c * c2);
      for (const auto& [inner, c2] : formal_delta(dim, word[1])) add_word(right, {word[0], inner[0], inner[1]}, c * c2);
    }
    drop_zeros(left);
    drop_zeros(right);
    ok = ok && left == right;
  });
  return ok;
}

bool check_counit_laws(SuperDim dim) {
  bool ok = true;
  for_each_generator(dim, [&](const GeneratorSymbol& g) {
    FormalTensor left;
    FormalTensor right;
    for (const auto& [word, c] : formal_delta(dim, g)) {
      add_word(left, {word[1]}, c * counit_of(word[0]));
      add_word(right, {word[0]}, c * counit_of(word[1]));
    }
    drop_zeros(left);
    drop_zeros(right);
    const FormalTensor expected{{{g}, 1}};
    ok = ok && left == expected && right == expected;
  });
  return ok;
}

bool twist_isomorphism_check(SuperDim dim) {
  auto twist = [&](std::size_t i, std::size_t j) {
    return (dim.parity(j) && ((dim.parity(i) + dim.parity(j)) & 1)) ? -1 : 1;
  };
  for (std::size_t i = 0; i < dim.total(); ++i) {
    for (std::size_t j = 0; j < dim.total(); ++j) {
      FormalTensor lhs;
      FormalTensor rhs;
      for (std::size_t h = 0; h < dim.total(); ++h) {
        const std::vector<GeneratorSymbol> word{{false, i, h}, {false, h, j}};
        add_word(lhs, word, twist(i, h) * twist(h, j));
        const int exponent = ((dim.parity(i) + dim.parity(h)) & 1) * ((dim.parity(h) + dim.parity(j)) & 1);
        add_word(rhs, word, twist(i, j) * (exponent ? -1 : 1));
      }
      drop_zeros(lhs);
      drop_zeros(rhs);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Bidegree spans

namespace {

std::size_t checked_power(std::size_t base, std::size_t exponent, std::size_t bound) {
  std::size_t out = 1;
  for (std::size_t k = 0; k < exponent; ++k) {
    if (base != 0 && out > bound / base) return bound + 1;
    out *= base;
  }
  return out;
}

// All nondecreasing sequences of length k over [0, alphabet).
std::vector<std::vector<std::size_t>> multisets(std::size_t alphabet, unsigned k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (current.size() == k) {
      out.push_back(current);
      return;
    }
    for (std::size_t g = start; g < alphabet; ++g) {
      current.push_back(g);
      self(self, g);
      current.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

BidegreeSpan bidegree_span(const RingPtr& ring, const Matrix<LocalizedElement>& inverse, unsigned r, unsigned s,
                           const ResourceLimits& limits) {
  const std::size_t n = ring->size();
  const std::size_t products = checked_power(n, 2 * (r + s), limits.max_span_products);
  if (products > limits.max_span_products) {
    throw ResourceLimitExceeded("bidegree span: (m+n)^(2(r+s)) exceeds the configured bound");
  }
  const std::size_t g = n * n;
  std::vector<LocalizedElement> x_products;
  for (const auto& word : multisets(g, r)) {
    LocalizedElement p = LocalizedElement::constant(ring, 1);
    for (auto idx : word) p = p * LocalizedElement::generator(ring, idx / n, idx % n);
    x_products.push_back(std::move(p));
  }
  std::vector<LocalizedElement> inverse_products;
  for (const auto& word : multisets(g, s)) {
    LocalizedElement p = LocalizedElement::constant(ring, 1);
    for (auto idx : word) p = p * inverse(idx / n, idx % n);
    inverse_products.push_back(std::move(p));
  }
  BidegreeSpan span{r, s, {}};
  span.spanning.reserve(x_products.size() * inverse_products.size());
  for (const auto& a : x_products)
    for (const auto& b : inverse_products) span.spanning.push_back(a * b);
  return span;
}

namespace {

// Multidegree of numerator minus that of the denominator; nullopt if inhomogeneous.
std::optional<Weight> fraction_weight(const LocalizedElement& u) {
  const auto& ring = *u.ring();
  std::optional<Weight> w;
  for (const auto& [mono, c] : u.numerator().terms()) {
    Weight wm = ring.weight(mono);
    if (!w) {
      w = std::move(wm);
    } else if (*w != wm) {
      return std::nullopt;
    }
  }
  const Weight w1 = ring.d1_weight();
  const Weight w2 = ring.d2_weight();
  for (std::size_t k = 0; k < w->size(); ++k) {
    (*w)[k] -= static_cast<int>(u.d1_power()) * w1[k] + static_cast<int>(u.d2_power()) * w2[k];
  }
  return w;
}

struct Group {
  std::vector<const LocalizedElement*> big;
  std::vector<const LocalizedElement*> small;
};

// Groups nonzero elements by multidegree; everything lands in one group if any
// element is inhomogeneous.
std::map<Weight, Group> group_by_weight(const std::vector<LocalizedElement>& big,
                                        const std::vector<LocalizedElement>& small) {
  std::map<Weight, Group> groups;
  bool homogeneous = true;
  auto place = [&](const LocalizedElement& u, bool is_big) {
    if (u.is_zero()) return;
    auto w = fraction_weight(u);
    if (!w) homogeneous = false;
    auto& g = groups[w.value_or(Weight{})];
    (is_big ? g.big : g.small).push_back(&u);
  };
  for (const auto& u : big) place(u, true);
  for (const auto& u : small) place(u, false);
  if (!homogeneous) {
    Group all;
    for (auto& [w, g] : groups) {
      all.big.insert(all.big.end(), g.big.begin(), g.big.end());
      all.small.insert(all.small.end(), g.small.begin(), g.small.end());
    }
    groups.clear();
    groups.emplace(Weight{}, std::move(all));
  }
  return groups;
}

class ColumnIndex {
 public:
  SparseVector vectorize(const SuperPolynomial& p) {
    std::vector<SparseVector::Entry> entries;
    entries.reserve(p.size());
    for (const auto& [mono, c] : p.terms()) {
      auto [it, inserted] = columns_.try_emplace(mono, static_cast<SparseVector::Index>(columns_.size()));
      entries.emplace_back(it->second, c);
    }
    return SparseVector(std::move(entries));
  }

 private:
  std::unordered_map<Monomial, SparseVector::Index, MonomialHash> columns_;
};

std::pair<unsigned, unsigned> common_denominator(const Group& g) {
  unsigned a = 0;
  unsigned b = 0;
  for (const auto* list : {&g.big, &g.small})
    for (const auto* u : *list) {
      a = std::max(a, u->d1_power());
      b = std::max(b, u->d2_power());
    }
  return {a, b};
}

}  // namespace

std::size_t span_rank(const std::vector<LocalizedElement>& elements) {
  std::size_t total = 0;
  for (const auto& [w, group] : group_by_weight(elements, {})) {
    auto [a, b] = common_denominator(group);
    ColumnIndex columns;
    EchelonBasis basis;
    for (const auto* u : group.big) basis.insert(columns.vectorize(u->rescaled(a, b).numerator()));
    total += basis.rank();
  }
  return total;
}

bool span_contains(const std::vector<LocalizedElement>& big, const std::vector<LocalizedElement>& small) {
  for (const auto& [w, group] : group_by_weight(big, small)) {
    if (group.small.empty()) continue;
    auto [a, b] = common_denominator(group);
    ColumnIndex columns;
    EchelonBasis basis;
    for (const auto* u : group.big) basis.insert(columns.vectorize(u->rescaled(a, b).numerator()));
    for (const auto* u : group.small) {
      if (!basis.contains(columns.vectorize(u->rescaled(a, b).numerator()))) return false;
    }
  }
  return true;
}

std::size_t bidegree_dimension(const RingPtr& ring, const Matrix<LocalizedElement>& inverse, unsigned r,
                               unsigned s, const ResourceLimits& limits) {
  return span_rank(bidegree_span(ring, inverse, r, s, limits).spanning);
}

bool span_inclusion(const RingPtr& ring, const Matrix<LocalizedElement>& inverse, unsigned r, unsigned s,
                    const ResourceLimits& limits) {
  const auto lower = bidegree_span(ring, inverse, r, s, limits);
  const auto upper = bidegree_span(ring, inverse, r + 1, s + 1, limits);
  return span_contains(upper.spanning, lower.spanning);
}

}  // namespace superschur::superpoly
