#include "superschur/centralizer.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace superschur::centralizer {

Degree operator+(const Degree& a, const Degree& b) {
  Degree out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
  return out;
}

Degree operator-(const Degree& a) {
  Degree out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = -a[k];
  return out;
}

Grading Grading::from_diagonals(std::size_t n, const std::vector<SparseMatrix>& diagonals) {
  Grading g(n);
  for (const auto& d : diagonals) {
    if (d.size() != n || !d.is_diagonal()) throw std::invalid_argument("Grading: labels must be diagonal N x N");
    for (std::size_t i = 0; i < n; ++i) g.labels_[i].push_back(d.at(i, i));
  }
  return g;
}

Degree Grading::degree(std::size_t i, std::size_t j) const {
  Degree out(rank());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = labels_[i][k] - labels_[j][k];
  return out;
}

std::map<Degree, SparseMatrix> Grading::split(const SparseMatrix& m) const {
  std::map<Degree, std::vector<std::pair<std::size_t, SparseVector::Entry>>> parts;
  m.for_each([&](std::size_t i, std::size_t j, const Rational& v) {
    parts[degree(i, j)].push_back({i, {static_cast<SparseVector::Index>(j), v}});
  });
  std::map<Degree, SparseMatrix> out;
  for (auto& [deg, entries] : parts) {
    std::vector<std::vector<SparseVector::Entry>> rows(m.size());
    for (auto& [i, e] : entries) rows[i].push_back(std::move(e));
    SparseMatrix part(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
      if (!rows[i].empty()) part.set_row(i, SparseVector(std::move(rows[i])));
    out.emplace(deg, std::move(part));
  }
  return out;
}

std::optional<Degree> Grading::degree_of(const SparseMatrix& m) const {
  std::optional<Degree> deg;
  bool ok = true;
  m.for_each([&](std::size_t i, std::size_t j, const Rational&) {
    if (!ok) return;
    Degree d = degree(i, j);
    if (!deg) {
      deg = std::move(d);
    } else if (*deg != d) {
      ok = false;
    }
  });
  if (!ok) return std::nullopt;
  return deg;
}

Grading Grading::refine(const Grading& other) const {
  if (other.size() != size()) throw std::invalid_argument("Grading::refine: size mismatch");
  Grading g = *this;
  for (std::size_t i = 0; i < size(); ++i)
    g.labels_[i].insert(g.labels_[i].end(), other.labels_[i].begin(), other.labels_[i].end());
  return g;
}

// ---------------------------------------------------------------------------

MatrixSubalgebra::MatrixSubalgebra(std::size_t n, Grading grading) : n_(n), grading_(std::move(grading)) {
  if (grading_.size() != n) throw std::invalid_argument("MatrixSubalgebra: grading size mismatch");
}

std::size_t MatrixSubalgebra::dimension() const {
  std::size_t total = 0;
  for (const auto& [deg, block] : blocks_) total += block.basis.rank();
  return total;
}

bool MatrixSubalgebra::contains_identity() const { return contains(SparseMatrix::identity(n_)); }

std::vector<SparseMatrix> MatrixSubalgebra::basis() const {
  std::vector<SparseMatrix> out;
  out.reserve(dimension());
  for (const auto& [deg, block] : blocks_)
    for (const auto& row : block.basis.rows()) out.push_back(SparseMatrix::from_flat(n_, row));
  return out;
}

bool MatrixSubalgebra::contains(const SparseMatrix& m) const {
  if (m.size() != n_) throw std::invalid_argument("MatrixSubalgebra::contains: size mismatch");
  for (const auto& [deg, part] : grading_.split(m)) {
    auto it = blocks_.find(deg);
    if (it == blocks_.end() || !it->second.basis.contains(part.flatten())) return false;
  }
  return true;
}

bool MatrixSubalgebra::insert(const Degree& degree, const SparseMatrix& m) {
  if (m.is_zero()) return false;
  return blocks_[degree].basis.insert(m.flatten());
}

// ---------------------------------------------------------------------------

namespace {

void check_ambient(std::size_t n, const ResourceLimits& limits) {
  if (n * n > limits.max_ambient_entries) {
    throw ResourceLimitExceeded("matrix algebra: N*N = " + std::to_string(n * n) + " exceeds the configured bound " +
                                std::to_string(limits.max_ambient_entries));
  }
}

void check_sizes(std::size_t n, const std::vector<SparseMatrix>& mats) {
  for (const auto& m : mats)
    if (m.size() != n) throw std::invalid_argument("matrix algebra: generator size mismatch");
}

// Diagonal hints under which every matrix is homogeneous (degree_zero: of degree 0).
std::vector<SparseMatrix> admissible_hints(std::size_t n, const std::vector<SparseMatrix>& hints,
                                           const std::vector<SparseMatrix>& mats, bool degree_zero) {
  std::vector<SparseMatrix> out;
  for (const auto& h : hints) {
    if (h.size() != n || !h.is_diagonal()) continue;
    const Grading g = Grading::from_diagonals(n, {h});
    bool ok = true;
    for (const auto& m : mats) {
      if (m.is_zero()) continue;
      auto deg = g.degree_of(m);
      if (!deg || (degree_zero && !superschur::is_zero(deg->front()))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(h);
  }
  return out;
}

std::vector<SparseMatrix> diagonal_members(const std::vector<SparseMatrix>& mats) {
  std::vector<SparseMatrix> out;
  for (const auto& m : mats)
    if (m.is_diagonal()) out.push_back(m);
  return out;
}

Grading combined_grading(std::size_t n, const std::vector<SparseMatrix>& diagonals,
                         const std::vector<SparseMatrix>& hints) {
  std::vector<SparseMatrix> all = diagonals;
  all.insert(all.end(), hints.begin(), hints.end());
  return Grading::from_diagonals(n, all);
}

}  // namespace

MatrixSubalgebra generate_algebra(std::size_t n, const std::vector<SparseMatrix>& generators,
                                  const std::vector<SparseMatrix>& hints, const ResourceLimits& limits) {
  check_ambient(n, limits);
  check_sizes(n, generators);
  // Homogeneous components of a generator lie in the algebra when the grading
  // comes from diagonal members of the algebra; hints must already be respected.
  const Grading grading =
      combined_grading(n, diagonal_members(generators), admissible_hints(n, hints, generators, false));
  MatrixSubalgebra algebra(n, grading);

  std::vector<std::pair<Degree, SparseMatrix>> components;
  std::vector<SparseMatrix> stored;
  for (const auto& g : generators) {
    for (auto& [deg, part] : grading.split(g)) {
      stored.push_back(part);
      components.emplace_back(deg, std::move(part));
    }
  }
  algebra.set_generators(std::move(stored));

  std::deque<std::pair<Degree, SparseMatrix>> queue;
  const Degree zero = grading.zero_degree();
  const SparseMatrix id = SparseMatrix::identity(n);
  if (n > 0) {
    algebra.insert(zero, id);
    queue.emplace_back(zero, id);
  }
  while (!queue.empty()) {
    auto [deg, b] = std::move(queue.front());
    queue.pop_front();
    for (const auto& [gdeg, g] : components) {
      SparseMatrix prod = g * b;
      Degree pdeg = gdeg + deg;
      if (algebra.insert(pdeg, prod)) queue.emplace_back(std::move(pdeg), std::move(prod));
    }
  }
  return algebra;
}

MatrixSubalgebra span_algebra(std::size_t n, const std::vector<SparseMatrix>& matrices,
                              const std::vector<SparseMatrix>& hints, const ResourceLimits& limits) {
  check_ambient(n, limits);
  check_sizes(n, matrices);
  const Grading grading = combined_grading(n, {}, admissible_hints(n, hints, matrices, false));
  MatrixSubalgebra algebra(n, grading);
  for (const auto& m : matrices)
    for (const auto& [deg, part] : grading.split(m)) algebra.insert(deg, part);
  const auto basis = algebra.basis();
  for (const auto& a : basis)
    for (const auto& b : basis)
      if (!algebra.contains(a * b)) throw VerificationFailure("span_algebra: span is not closed under products");
  algebra.set_generators(matrices);
  return algebra;
}

MatrixSubalgebra commutant(std::size_t n, const std::vector<SparseMatrix>& generators,
                           const std::vector<SparseMatrix>& hints, const ResourceLimits& limits) {
  check_ambient(n, limits);
  check_sizes(n, generators);
  const std::vector<SparseMatrix> diagonals = diagonal_members(generators);
  const Grading dgrading = Grading::from_diagonals(n, diagonals);
  const Grading hgrading = Grading::from_diagonals(n, admissible_hints(n, hints, generators, true));
  const Grading grading = dgrading.refine(hgrading);

  // Commuting with a diagonal generator forces zero entries between different labels.
  std::map<Degree, std::vector<std::pair<std::size_t, std::size_t>>> variables;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (dgrading.label(i) == dgrading.label(j)) variables[grading.degree(i, j)].emplace_back(i, j);

  std::vector<const SparseMatrix*> active;
  std::vector<SparseMatrix> transposes;
  for (const auto& g : generators) {
    if (g.is_diagonal()) continue;
    active.push_back(&g);
  }
  transposes.reserve(active.size());
  for (const auto* g : active) transposes.push_back(g->transpose());

  MatrixSubalgebra algebra(n, grading);
  for (const auto& [deg, vars] : variables) {
    EchelonBasis equations;
    for (std::size_t gi = 0; gi < active.size(); ++gi) {
      const SparseMatrix& g = *active[gi];
      const SparseMatrix& gt = transposes[gi];
      // (Xg - gX)_{kl}: X_ij contributes g_jl at (i,l) and -g_ki at (k,j).
      std::unordered_map<std::uint64_t, std::vector<SparseVector::Entry>> rows;
      for (std::size_t v = 0; v < vars.size(); ++v) {
        const auto [i, j] = vars[v];
        const auto var = static_cast<SparseVector::Index>(v);
        for (const auto& [l, gjl] : g.row(j).entries()) rows[std::uint64_t{i} * n + l].emplace_back(var, gjl);
        for (const auto& [k, gki] : gt.row(i).entries()) rows[std::uint64_t{k} * n + j].emplace_back(var, -gki);
      }
      std::vector<std::uint64_t> keys;
      keys.reserve(rows.size());
      for (const auto& kv : rows) keys.push_back(kv.first);
      std::sort(keys.begin(), keys.end());
      for (auto key : keys) equations.insert(SparseVector(std::move(rows[key])));
    }
    for (const auto& sol : equations.nullspace(vars.size())) {
      std::vector<std::vector<SparseVector::Entry>> mrows(n);
      for (const auto& [v, c] : sol.entries()) {
        const auto [i, j] = vars[v];
        mrows[i].emplace_back(static_cast<SparseVector::Index>(j), c);
      }
      SparseMatrix m(n);
      for (std::size_t i = 0; i < n; ++i)
        if (!mrows[i].empty()) m.set_row(i, SparseVector(std::move(mrows[i])));
      algebra.insert(deg, m);
    }
  }
  return algebra;
}

MatrixSubalgebra commutant(const MatrixSubalgebra& a, const std::vector<SparseMatrix>& hints,
                           const ResourceLimits& limits) {
  return commutant(a.ambient(), a.generators().empty() ? a.basis() : a.generators(), hints, limits);
}

bool subalgebra_equal(const MatrixSubalgebra& a, const MatrixSubalgebra& b) {
  if (a.ambient() != b.ambient() || a.dimension() != b.dimension()) return false;
  const auto bb = b.basis();
  if (!std::all_of(bb.begin(), bb.end(), [&](const SparseMatrix& m) { return a.contains(m); })) return false;
  const auto ab = a.basis();
  return std::all_of(ab.begin(), ab.end(), [&](const SparseMatrix& m) { return b.contains(m); });
}

// ---------------------------------------------------------------------------
// Radical

namespace {

constexpr std::uint64_t kPrime = 2305843009213693951ULL;  // 2^61 - 1

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

std::optional<std::uint64_t> reduce_mod(const Rational& q) {
  const std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), kPrime);
  if (den == 0) return std::nullopt;
  const std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), kPrime);
  return mulmod(num, powmod(den, kPrime - 2));
}

using ModVector = std::vector<std::pair<std::uint32_t, std::uint64_t>>;

std::optional<ModVector> to_mod(const SparseVector& v) {
  ModVector out;
  out.reserve(v.nnz());
  for (const auto& [i, q] : v.entries()) {
    auto r = reduce_mod(q);
    if (!r) return std::nullopt;
    out.emplace_back(i, *r);
  }
  return out;
}

std::uint64_t dot_mod(const ModVector& a, const ModVector& b) {
  unsigned __int128 acc = 0;
  auto x = a.begin();
  auto y = b.begin();
  while (x != a.end() && y != b.end()) {
    if (x->first < y->first) {
      ++x;
    } else if (y->first < x->first) {
      ++y;
    } else {
      acc += static_cast<unsigned __int128>(x->second) * y->second;
      acc %= kPrime;
      ++x;
      ++y;
    }
  }
  return static_cast<std::uint64_t>(acc);
}

std::size_t dense_rank_mod(std::vector<std::vector<std::uint64_t>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const std::uint64_t inv = powmod(rows[rank][c], kPrime - 2);
    for (std::size_t k = c; k < cols; ++k) rows[rank][k] = mulmod(rows[rank][k], inv);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const std::uint64_t f = rows[r][c];
      if (f == 0) continue;
      for (std::size_t k = c; k < cols; ++k) {
        const std::uint64_t sub = mulmod(f, rows[rank][k]);
        rows[r][k] = rows[r][k] >= sub ? rows[r][k] - sub : rows[r][k] + kPrime - sub;
      }
    }
    ++rank;
  }
  return rank;
}

// Flattened transpose: entry (i,j) of b moved to index j*N+i.
SparseVector flat_transpose(std::size_t n, const SparseVector& flat) {
  std::vector<SparseVector::Entry> entries;
  entries.reserve(flat.nnz());
  for (const auto& [idx, v] : flat.entries())
    entries.emplace_back(static_cast<SparseVector::Index>((idx % n) * n + idx / n), v);
  return SparseVector(std::move(entries));
}

// Elements of `rows` orthogonal under the trace form to every element of `partners`.
std::vector<SparseVector> trace_form_kernel(std::size_t n, const std::vector<SparseVector>& rows,
                                            const std::vector<SparseVector>& partners) {
  if (rows.empty()) return {};
  std::vector<SparseVector> partner_t;
  partner_t.reserve(partners.size());
  for (const auto& p : partners) partner_t.push_back(flat_transpose(n, p));

  // A full-rank Gram matrix mod p certifies a trivial kernel over Q.
  if (!partners.empty()) {
    std::vector<ModVector> rm;
    std::vector<ModVector> pm;
    bool reducible = true;
    for (const auto& r : rows) {
      auto v = to_mod(r);
      if (!v) {
        reducible = false;
        break;
      }
      rm.push_back(std::move(*v));
    }
    for (const auto& p : partner_t) {
      if (!reducible) break;
      auto v = to_mod(p);
      if (!v) {
        reducible = false;
        break;
      }
      pm.push_back(std::move(*v));
    }
    if (reducible) {
      std::vector<std::vector<std::uint64_t>> gram(rm.size(), std::vector<std::uint64_t>(pm.size()));
      for (std::size_t k = 0; k < rm.size(); ++k)
        for (std::size_t l = 0; l < pm.size(); ++l) gram[k][l] = dot_mod(rm[k], pm[l]);
      if (dense_rank_mod(std::move(gram)) == rows.size()) return {};
    }
  }

  // Exact kernel: c with sum_k c_k tr(a_k b_l) = 0 for every l.
  EchelonBasis equations;
  for (const auto& p : partner_t) {
    std::vector<SparseVector::Entry> eq;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      Rational t = rows[k].dot(p);
      if (!superschur::is_zero(t)) eq.emplace_back(static_cast<SparseVector::Index>(k), std::move(t));
    }
    equations.insert(SparseVector(std::move(eq)));
  }
  std::vector<SparseVector> out;
  for (const auto& sol : equations.nullspace(rows.size())) {
    SparseVector combo;
    for (const auto& [k, c] : sol.entries()) combo.axpy(c, rows[k]);
    out.push_back(std::move(combo));
  }
  return out;
}

}  // namespace

RadicalResult radical(const MatrixSubalgebra& a) {
  const std::size_t n = a.ambient();
  RadicalResult result;
  for (const auto& [deg, block] : a.blocks()) {
    auto partner = a.blocks().find(-deg);
    static const std::vector<SparseVector> kNone;
    const auto& partners = partner == a.blocks().end() ? kNone : partner->second.basis.rows();
    for (auto& v : trace_form_kernel(n, block.basis.rows(), partners))
      result.basis.push_back(SparseMatrix::from_flat(n, v));
  }
  if (result.basis.empty()) return result;

  // Certificate: J^k = 0 for some k <= dim A.
  std::vector<SparseMatrix> power = result.basis;
  for (std::size_t k = 1; k <= a.dimension() + 1; ++k) {
    if (power.empty()) {
      result.nilpotency_index = k;
      return result;
    }
    EchelonBasis next;
    std::vector<SparseMatrix> next_mats;
    for (const auto& j : result.basis) {
      for (const auto& p : power) {
        SparseMatrix prod = j * p;
        if (next.insert(prod.flatten())) next_mats.push_back(std::move(prod));
      }
    }
    power = std::move(next_mats);
  }
  throw VerificationFailure("radical: trace-form kernel is not nilpotent");
}

// ---------------------------------------------------------------------------
// Center and blocks

namespace {

constexpr SparseVector::Index kTagOffset = SparseVector::Index{1} << 31;

}  // namespace

std::vector<SparseMatrix> center_basis(const MatrixSubalgebra& a, const ResourceLimits& limits) {
  const std::size_t n = a.ambient();
  std::vector<SparseMatrix> tests = a.generators();
  if (tests.empty()) {
    if (a.dimension() > 4000) {
      throw ResourceLimitExceeded("center: algebra without known generators is too large");
    }
    tests = a.basis();
  }
  if (tests.size() * n * n >= kTagOffset || tests.size() * n * n > 64 * limits.max_ambient_entries) {
    throw ResourceLimitExceeded("center: commutator system too large");
  }
  std::vector<SparseMatrix> out;
  for (const auto& [deg, block] : a.blocks()) {
    const auto& rows = block.basis.rows();
    EchelonBasis relations;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const SparseMatrix b = SparseMatrix::from_flat(n, rows[k]);
      std::vector<SparseVector::Entry> entries;
      for (std::size_t t = 0; t < tests.size(); ++t) {
        const SparseVector c = (b * tests[t] - tests[t] * b).flatten();
        for (const auto& [idx, v] : c.entries())
          entries.emplace_back(static_cast<SparseVector::Index>(t * n * n + idx), v);
      }
      entries.emplace_back(static_cast<SparseVector::Index>(kTagOffset + k), Rational(1));
      SparseVector v(std::move(entries));
      SparseVector reduced = relations.reduce(v);
      if (!reduced.empty() && reduced.leading_index() >= kTagOffset) {
        SparseVector z;
        for (const auto& [idx, c] : reduced.entries()) z.axpy(c, rows[idx - kTagOffset]);
        out.push_back(SparseMatrix::from_flat(n, z));
      }
      relations.insert(v);
    }
  }
  return out;
}

std::size_t center_dimension(const MatrixSubalgebra& a, const ResourceLimits& limits) {
  return center_basis(a, limits).size();
}

namespace {

// Divisors of |x| when small enough to factor by trial division.
std::optional<std::vector<mpz_class>> divisors(const mpz_class& x) {
  mpz_class v = abs(x);
  if (v == 0 || v > mpz_class("1000000000000")) return std::nullopt;
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      if (d * d != v) out.push_back(v / d);
    }
  }
  return out;
}

// Distinct rational roots of the polynomial with coefficients c[0..d].
std::optional<std::vector<Rational>> rational_roots(std::vector<Rational> c) {
  std::vector<Rational> roots;
  while (c.size() > 1 && superschur::is_zero(c.front())) {
    roots.emplace_back(0);
    c.erase(c.begin());
  }
  if (c.size() == 1) return roots;
  mpz_class lcm = 1;
  for (const auto& q : c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& q : c) ints.push_back(mpz_class(q * lcm));
  auto ps = divisors(ints.front());
  auto qs = divisors(ints.back());
  if (!ps || !qs) return std::nullopt;
  for (const auto& p : *ps) {
    for (const auto& q : *qs) {
      for (int sign : {1, -1}) {
        Rational x(sign * p, q);
        x.canonicalize();
        Rational value = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) value = value * x + *it;
        if (superschur::is_zero(value) && std::find(roots.begin(), roots.end(), x) == roots.end())
          roots.push_back(x);
      }
    }
  }
  return roots;
}

std::optional<std::size_t> perfect_square_root(std::size_t v) {
  std::size_t r = 0;
  while ((r + 1) * (r + 1) <= v) ++r;
  if (r * r != v) return std::nullopt;
  return r;
}

}  // namespace

std::optional<std::vector<std::size_t>> block_dimensions(const MatrixSubalgebra& a, const ResourceLimits& limits) {
  const std::size_t n = a.ambient();
  const auto center = center_basis(a, limits);
  if (center.empty()) return std::nullopt;
  const auto basis = a.basis();

  auto block_size = [&](const SparseMatrix& e) -> std::optional<std::size_t> {
    EchelonBasis span;
    for (const auto& b : basis) span.insert((e * b).flatten());
    return perfect_square_root(span.rank());
  };

  if (center.size() == 1) {
    auto d = perfect_square_root(a.dimension());
    if (!d) return std::nullopt;
    return std::vector<std::size_t>{*d};
  }

  // Try a few integer combinations of the central basis for one with c distinct eigenvalues.
  for (int attempt = 1; attempt <= 8; ++attempt) {
    SparseMatrix z(n);
    for (std::size_t k = 0; k < center.size(); ++k)
      z = z + Rational(static_cast<long>((k + 1) * attempt + k * k)) * center[k];

    // Minimal polynomial by Krylov iteration on flattened powers.
    EchelonBasis krylov;
    std::vector<Rational> minpoly;
    SparseMatrix power = SparseMatrix::identity(n);
    for (std::size_t k = 0; k <= center.size(); ++k) {
      std::vector<SparseVector::Entry> entries = power.flatten().entries();
      entries.emplace_back(static_cast<SparseVector::Index>(kTagOffset + k), Rational(1));
      SparseVector v(std::move(entries));
      SparseVector reduced = krylov.reduce(v);
      if (!reduced.empty() && reduced.leading_index() >= kTagOffset) {
        minpoly.assign(k + 1, Rational(0));
        for (const auto& [idx, c] : reduced.entries()) minpoly[idx - kTagOffset] = c;
        break;
      }
      krylov.insert(v);
      power = power * z;
    }
    if (minpoly.size() != center.size() + 1) continue;
    auto roots = rational_roots(minpoly);
    if (!roots || roots->size() != center.size()) return std::nullopt;

    std::vector<std::size_t> dims;
    for (std::size_t i = 0; i < roots->size(); ++i) {
      SparseMatrix e = SparseMatrix::identity(n);
      for (std::size_t j = 0; j < roots->size(); ++j) {
        if (j == i) continue;
        const Rational scale = 1 / ((*roots)[i] - (*roots)[j]);
        e = scale * (e * (z - (*roots)[j] * SparseMatrix::identity(n)));
      }
      auto d = block_size(e);
      if (!d) return std::nullopt;
      dims.push_back(*d);
    }
    std::sort(dims.begin(), dims.end(), std::greater<>());
    return dims;
  }
  return std::nullopt;
}

}  // namespace superschur::centralizer
