#include "superschur/liealg.hpp"

#include <limits>
#include <stdexcept>

namespace superschur::liealg {

std::vector<GlBasisElement> gl_basis(SuperDim dim) {
  std::vector<GlBasisElement> out;
  for (std::size_t a = 0; a < dim.total(); ++a)
    for (std::size_t b = 0; b < dim.total(); ++b) out.push_back({a, b});
  return out;
}

GlCombination bracket(SuperDim dim, const GlBasisElement& x, const GlBasisElement& y) {
  GlCombination out;
  if (x.b == y.a) out[{x.a, y.b}] += 1;
  if (y.b == x.a) {
    const int sign = (x.parity(dim) & y.parity(dim)) ? -1 : 1;
    out[{y.a, x.b}] -= sign;
  }
  std::erase_if(out, [](const auto& kv) { return superschur::is_zero(kv.second); });
  return out;
}

SparseMatrix action_on_V(SuperDim dim, const GlBasisElement& x) {
  SparseMatrix m(dim.total());
  m.add_to(x.a, x.b, 1);
  return m;
}

SparseMatrix action_on_W(SuperDim dim, const GlBasisElement& x) {
  // Column a (input e_a^*) maps to row b (output e_b^*).
  SparseMatrix m(dim.total());
  const int sign = (x.parity(dim) & dim.parity(x.a)) ? -1 : 1;
  m.add_to(x.b, x.a, -sign);
  return m;
}

TensorSpace::TensorSpace(SuperDim dim, unsigned r, unsigned s) : dim_(dim), r_(r), s_(s), size_(1) {
  for (unsigned k = 0; k < r + s; ++k) {
    if (dim.total() != 0 && size_ > std::numeric_limits<std::size_t>::max() / dim.total())
      throw ResourceLimitExceeded("TensorSpace: dimension overflow");
    size_ *= dim.total();
  }
}

std::vector<std::size_t> TensorSpace::decode(std::size_t index) const {
  std::vector<std::size_t> tuple(factors());
  for (std::size_t p = factors(); p-- > 0;) {
    tuple[p] = index % dim_.total();
    index /= dim_.total();
  }
  return tuple;
}

std::size_t TensorSpace::encode(const std::vector<std::size_t>& tuple) const {
  std::size_t index = 0;
  for (auto i : tuple) index = index * dim_.total() + i;
  return index;
}

std::vector<int> TensorSpace::parities(const std::vector<std::size_t>& tuple) const {
  std::vector<int> out;
  out.reserve(tuple.size());
  for (auto i : tuple) out.push_back(dim_.parity(i));
  return out;
}

int TensorSpace::parity(std::size_t index) const {
  int p = 0;
  for (auto i : decode(index)) p ^= dim_.parity(i);
  return p;
}

const SparseMatrix& RepresentationMatrixSet::of(const GlBasisElement& x) const {
  const std::size_t total = space.dim().total();
  if (x.a >= total || x.b >= total) throw std::out_of_range("RepresentationMatrixSet: index out of range");
  return matrices[x.a * total + x.b];
}

SparseMatrix RepresentationMatrixSet::evaluate(const GlCombination& c) const {
  SparseMatrix out(space.size());
  for (const auto& [x, coeff] : c) out = out + coeff * of(x);
  return out;
}

std::vector<SparseMatrix> RepresentationMatrixSet::cartan() const {
  std::vector<SparseMatrix> out;
  for (std::size_t a = 0; a < space.dim().total(); ++a) out.push_back(of({a, a}));
  return out;
}

std::vector<SparseMatrix> RepresentationMatrixSet::chevalley() const {
  std::vector<SparseMatrix> out = cartan();
  for (std::size_t a = 0; a + 1 < space.dim().total(); ++a) {
    out.push_back(of({a, a + 1}));
    out.push_back(of({a + 1, a}));
  }
  return out;
}

RepresentationMatrixSet rho_rs(SuperDim dim, unsigned r, unsigned s, const ResourceLimits& limits) {
  TensorSpace space(dim, r, s);
  if (space.size() > limits.max_ambient_entries) {
    throw ResourceLimitExceeded("rho_rs: tensor space dimension " + std::to_string(space.size()) +
                                " exceeds the configured bound");
  }
  RepresentationMatrixSet reps{space, gl_basis(dim), {}};
  const std::size_t n = space.size();
  for (const auto& x : reps.elements) {
    const int px = x.parity(dim);
    std::vector<std::vector<SparseVector::Entry>> rows(n);
    for (std::size_t col = 0; col < n; ++col) {
      auto tuple = space.decode(col);
      int before = 0;
      for (std::size_t p = 0; p < tuple.size(); ++p) {
        const std::size_t c = tuple[p];
        const int sign = (px & before) ? -1 : 1;
        if (p < r) {
          if (c == x.b) {
            auto out = tuple;
            out[p] = x.a;
            rows[space.encode(out)].emplace_back(static_cast<SparseVector::Index>(col), Rational(sign));
          }
        } else if (c == x.a) {
          const int wsign = (px & dim.parity(c)) ? 1 : -1;
          auto out = tuple;
          out[p] = x.b;
          rows[space.encode(out)].emplace_back(static_cast<SparseVector::Index>(col), Rational(sign * wsign));
        }
        before ^= dim.parity(c);
      }
    }
    SparseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      if (!rows[i].empty()) m.set_row(i, SparseVector(std::move(rows[i])));
    reps.matrices.push_back(std::move(m));
  }
  return reps;
}

PropertyCheck check_representation_property(const RepresentationMatrixSet& reps) {
  PropertyCheck result;
  const SuperDim dim = reps.space.dim();
  for (const auto& x : reps.elements) {
    for (const auto& y : reps.elements) {
      ++result.checked;
      const int sign = (x.parity(dim) & y.parity(dim)) ? -1 : 1;
      const SparseMatrix lhs = reps.evaluate(bracket(dim, x, y));
      const SparseMatrix rhs = supercommutator(reps.of(x), reps.of(y), sign);
      if (!(lhs == rhs) && result.ok) {
        result.ok = false;
        result.first_failure = "[E" + std::to_string(x.a + 1) + std::to_string(x.b + 1) + ",E" +
                               std::to_string(y.a + 1) + std::to_string(y.b + 1) + "]";
      }
    }
  }
  return result;
}

PropertyCheck check_parity_homogeneity(const RepresentationMatrixSet& reps) {
  PropertyCheck result;
  const SuperDim dim = reps.space.dim();
  std::vector<int> parity(reps.space.size());
  for (std::size_t i = 0; i < parity.size(); ++i) parity[i] = reps.space.parity(i);
  for (const auto& x : reps.elements) {
    ++result.checked;
    const int px = x.parity(dim);
    reps.of(x).for_each([&](std::size_t i, std::size_t j, const Rational&) {
      if (((parity[j] + px) & 1) != parity[i] && result.ok) {
        result.ok = false;
        result.first_failure = "E" + std::to_string(x.a + 1) + std::to_string(x.b + 1);
      }
    });
  }
  return result;
}

centralizer::MatrixSubalgebra image_algebra(const RepresentationMatrixSet& reps, const ResourceLimits& limits) {
  return centralizer::generate_algebra(reps.space.size(), reps.chevalley(), reps.cartan(), limits);
}

std::size_t coefficient_space_dim(const RepresentationMatrixSet& reps, const ResourceLimits& limits) {
  return image_algebra(reps, limits).dimension();
}

}  // namespace superschur::liealg
