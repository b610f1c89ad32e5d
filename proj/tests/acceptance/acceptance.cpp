// Acceptance suite: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "superschur/brauer.hpp"
#include "superschur/centralizer.hpp"
#include "superschur/combinatorics.hpp"
#include "superschur/grassmann.hpp"
#include "superschur/liealg.hpp"
#include "superschur/superpoly.hpp"

using namespace superschur;
using superpoly::CoordinateRing;
using superpoly::LocalizedElement;
using superpoly::TensorSquareElement;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail.str("");
      detail << "failed: " << what;
    }
  }
};

std::string point_name(SuperDim d, unsigned r, unsigned s) {
  return "(" + std::to_string(d.m) + "|" + std::to_string(d.n) + ";" + std::to_string(r) + "," +
         std::to_string(s) + ")";
}

void ring_identities(Outcome& out) {
  for (SuperDim dim : {SuperDim{1, 0}, SuperDim{1, 1}, SuperDim{2, 1}}) {
    const auto ring = CoordinateRing::create(dim);
    const auto x = generic_matrix(ring).entries();
    const auto inv = generic_inverse(ring);
    const auto id = Matrix<LocalizedElement>::identity(dim.total(), LocalizedElement::constant(ring, 0));
    out.require(equal(x * inv, id), "x x~ = Id at (" + std::to_string(dim.m) + "|" + std::to_string(dim.n) + ")");
    out.require(equal(inv * x, id), "x~ x = Id at (" + std::to_string(dim.m) + "|" + std::to_string(dim.n) + ")");
  }
  if (out.ok) out.detail << "both products are the identity at (1|0), (1|1), (2|1)";
}

void cramer(Outcome& out) {
  std::size_t entries = 0;
  for (SuperDim dim : {SuperDim{1, 1}, SuperDim{2, 1}}) {
    const auto ring = CoordinateRing::create(dim);
    const auto inv = generic_inverse(ring);
    for (std::size_t i = 0; i < dim.total(); ++i)
      for (std::size_t j = 0; j < dim.total(); ++j) {
        out.require(superpoly::cramer_entry(ring, i, j) == inv(i, j),
                    "Cramer entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
        ++entries;
      }
  }
  if (out.ok) out.detail << entries << " entries agree with the block inverse";
}

void comultiplication(Outcome& out) {
  for (SuperDim dim : {SuperDim{1, 1}, SuperDim{2, 1}}) {
    const auto ring = CoordinateRing::create(dim);
    const auto inv = generic_inverse(ring);
    const std::size_t size = dim.total();
    std::vector<TensorSquareElement> a;
    std::vector<TensorSquareElement> c;
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) {
        a.push_back(superpoly::delta_generator(ring, i, j));
        c.push_back(superpoly::delta_inverse_formula(ring, inv, i, j));
        out.require(inv(i, j).counit() == Rational(i == j ? 1 : 0), "counit of x~");
      }
    // Plain matrix products in the tensor square.
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) {
        TensorSquareElement ac(ring);
        TensorSquareElement ca(ring);
        for (std::size_t k = 0; k < size; ++k) {
          ac = ac + a[i * size + k] * c[k * size + j];
          ca = ca + c[i * size + k] * a[k * size + j];
        }
        const auto id = i == j ? TensorSquareElement::one(ring) : TensorSquareElement(ring);
        const std::string where = " entry (" + std::to_string(i) + "," + std::to_string(j) + ") at (" +
                                  std::to_string(dim.m) + "|" + std::to_string(dim.n) + ")";
        out.require(ac == id, "A C" + where);
        out.require(ca == id, "C A" + where);
      }
  }
  if (out.ok) out.detail << "A C = C A = Id and counit(x~) = delta at (1|1), (2|1)";
}

void berezinian_laws(Outcome& out) {
  const std::size_t samples = 100;
  const unsigned generators = 4;
  const auto inv = grassmann_inverter();
  for (SuperDim dim : {SuperDim{1, 1}, SuperDim{2, 2}}) {
    std::mt19937_64 rng(1000 + dim.m * 10 + dim.n);
    for (std::size_t k = 0; k < samples; ++k) {
      const auto s = random_even_supermatrix(dim, generators, rng);
      const auto t = random_even_supermatrix(dim, generators, rng);
      const auto st = s * t;
      const std::string where = " sample " + std::to_string(k) + " at (" + std::to_string(dim.m) + "|" +
                                std::to_string(dim.n) + ")";
      out.require(berezinian(st, inv) == berezinian(s, inv) * berezinian(t, inv), "Ber(ST)" + where);
      out.require(berezinian_star(st, inv) == berezinian_star(s, inv) * berezinian_star(t, inv),
                  "Ber*(ST)" + where);
      out.require(berezinian(s, inv) * berezinian_star(s, inv) == GrassmannElement::scalar(generators, 1),
                  "Ber Ber*" + where);
    }
  }
  if (out.ok) out.detail << samples << " samples each at (1|1), (2|2), " << generators << " odd generators";
}

void representation_property(Outcome& out) {
  std::size_t points = 0;
  std::size_t pairs = 0;
  for (std::size_t total = 1; total <= 5; ++total)
    for (std::size_t m = 0; m <= total; ++m) {
      const SuperDim dim{m, total - m};
      for (unsigned r = 0; r <= 4; ++r)
        for (unsigned s = 0; s <= 4; ++s) {
          if (r + s == 0) continue;
          std::size_t n = 1;
          for (unsigned k = 0; k < r + s; ++k) n *= total;
          if (n > 625) continue;
          const auto reps = liealg::rho_rs(dim, r, s);
          const auto check = liealg::check_representation_property(reps);
          out.require(check.ok, "at " + point_name(dim, r, s) + ": " + check.first_failure);
          ++points;
          pairs += check.checked;
        }
    }
  if (out.ok) out.detail << pairs << " bracket pairs over " << points << " grid points with N <= 625";
}

void centralizer_dimension(Outcome& out) {
  struct Case {
    SuperDim dim;
    unsigned r, s;
  };
  for (const Case& c : {Case{{1, 1}, 1, 0}, Case{{1, 1}, 1, 1}, Case{{2, 0}, 1, 1}, Case{{3, 1}, 1, 1}}) {
    const auto ring = CoordinateRing::create(c.dim);
    const auto inv = generic_inverse(ring);
    const auto span_dim = superpoly::bidegree_dimension(ring, inv, c.r, c.s);
    const auto image_dim = liealg::image_algebra(liealg::rho_rs(c.dim, c.r, c.s)).dimension();
    out.require(span_dim == image_dim, "span " + std::to_string(span_dim) + " vs image " +
                                           std::to_string(image_dim) + " at " + point_name(c.dim, c.r, c.s));
    if (c.dim == SuperDim{3, 1}) {
      out.require(image_dim == 226, "image dimension at (3|1;1,1) is " + std::to_string(image_dim));
    }
    out.detail << point_name(c.dim, c.r, c.s) << "=" << image_dim << " ";
  }
}

struct DualityPoint {
  SuperDim dim;
  unsigned r, s;
};
const std::vector<DualityPoint> kDualityPoints = {{{3, 1}, 1, 1}, {{2, 0}, 1, 1}, {{4, 1}, 2, 1}};

// Both sides of the duality at one point, built once and shared by criteria 7, 8 and 10.
struct DualityData {
  centralizer::MatrixSubalgebra rho_image;
  centralizer::MatrixSubalgebra brauer_image;
  centralizer::MatrixSubalgebra rho_commutant;
  centralizer::MatrixSubalgebra brauer_commutant;
};

const DualityData& duality_data(std::size_t index) {
  static std::vector<std::unique_ptr<DualityData>> cache(kDualityPoints.size());
  auto& slot = cache[index];
  if (!slot) {
    const auto& p = kDualityPoints[index];
    const auto reps = liealg::rho_rs(p.dim, p.r, p.s);
    const auto cartan = reps.cartan();
    slot = std::make_unique<DualityData>();
    slot->rho_image = liealg::image_algebra(reps);
    const brauer::BrauerAction action(p.dim, p.r, p.s);
    slot->brauer_image = brauer::image_algebra_brauer(action);
    slot->rho_commutant = centralizer::commutant(slot->rho_image, cartan);
    slot->brauer_commutant = centralizer::commutant(slot->brauer_image, cartan);
  }
  return *slot;
}

void schur_weyl(Outcome& out) {
  for (std::size_t k = 0; k < kDualityPoints.size(); ++k) {
    const auto& p = kDualityPoints[k];
    const auto& d = duality_data(k);
    const auto name = point_name(p.dim, p.r, p.s);
    out.require(centralizer::subalgebra_equal(d.brauer_commutant, d.rho_image), "End_B(T) != rho(U) at " + name);
    out.require(centralizer::subalgebra_equal(d.rho_commutant, d.brauer_image), "End_gl(T) != B image at " + name);
    out.detail << name << " dims " << d.rho_image.dimension() << "/" << d.brauer_image.dimension() << " ";
  }
}

void semisimplicity(Outcome& out) {
  for (std::size_t k = 0; k < kDualityPoints.size(); ++k) {
    const auto& p = kDualityPoints[k];
    const auto rad = centralizer::radical(duality_data(k).rho_image);
    out.require(rad.basis.empty(), "radical of dimension " + std::to_string(rad.basis.size()) + " at " +
                                       point_name(p.dim, p.r, p.s));
  }
  const auto control = centralizer::radical(liealg::image_algebra(liealg::rho_rs({1, 1}, 1, 1)));
  out.require(!control.basis.empty(), "radical vanishes at (1|1;1,1)");
  if (out.ok) {
    out.detail << "radical 0 at the three points; (1|1;1,1) radical dim " << control.basis.size()
               << ", nilpotency " << control.nilpotency_index;
  }
}

void walled_brauer(Outcome& out) {
  for (unsigned r = 0; r <= 2; ++r)
    for (unsigned s = 0; s <= 2; ++s) {
      std::size_t fact = 1;
      for (unsigned k = 2; k <= r + s; ++k) fact *= k;
      out.require(brauer::enumerate_diagrams(r, s).size() == fact,
                  "diagram count at (" + std::to_string(r) + "," + std::to_string(s) + ")");
    }
  std::size_t commuting = 0;
  for (SuperDim dim : {SuperDim{1, 0}, SuperDim{2, 0}, SuperDim{1, 1}, SuperDim{2, 1}, SuperDim{1, 2},
                       SuperDim{3, 1}, SuperDim{0, 2}}) {
    const Rational delta(static_cast<long>(dim.m) - static_cast<long>(dim.n));
    for (unsigned r = 1; r <= 2; ++r)
      for (unsigned s = 1; s <= 2; ++s) {
        const auto name = point_name(dim, r, s);
        const auto e = brauer::BrauerElement::basis(brauer::WalledDiagram::contraction(r, s), delta);
        auto scaled = brauer::BrauerElement(delta);
        scaled.add(brauer::WalledDiagram::contraction(r, s), delta);
        out.require(e * e == scaled, "e^2 = delta e in the algebra at " + name);

        const brauer::BrauerAction action(dim, r, s);
        const auto& em = action.act(brauer::WalledDiagram::contraction(r, s));
        out.require(em * em == delta * em, "e^2 = delta e on T at " + name);
        const auto reps = liealg::rho_rs(dim, r, s);
        for (const auto& d : action.diagrams()) {
          const auto& dm = action.act(d);
          for (const auto& x : reps.matrices) {
            out.require(dm * x == x * dm, "diagram " + d.to_string() + " at " + name);
            ++commuting;
          }
        }
      }
  }
  if (out.ok) out.detail << "counts (r+s)! for r,s <= 2; " << commuting << " commuting pairs";
}

void block_counts(Outcome& out) {
  for (std::size_t k = 0; k < 2; ++k) {
    const auto& p = kDualityPoints[k];
    const auto centre = centralizer::center_dimension(duality_data(k).rho_commutant);
    const auto contracted = combinatorics::enumerate_cross(p.r, p.s, p.dim.m, p.dim.n,
                                                           combinatorics::CrossMode::contracted).size();
    const auto exact = combinatorics::enumerate_cross(p.r, p.s, p.dim.m, p.dim.n,
                                                      combinatorics::CrossMode::exact).size();
    const auto name = point_name(p.dim, p.r, p.s);
    out.require(contracted == centre, "contracted count " + std::to_string(contracted) + " vs center " +
                                          std::to_string(centre) + " at " + name);
    out.detail << name << " center " << centre << ", contracted " << contracted << ", exact " << exact;
    if (exact != centre) out.detail << " (exact differs)";
    out.detail << "; ";
  }
}

void chain_inclusion(Outcome& out) {
  const auto ring = CoordinateRing::create({1, 1});
  const auto inv = generic_inverse(ring);
  out.require(superpoly::span_inclusion(ring, inv, 1, 0), "span(1,0) not inside span(2,1)");
  out.require(superpoly::span_inclusion(ring, inv, 0, 0), "span(0,0) not inside span(1,1)");
  out.require(superpoly::span_inclusion(ring, inv, 2, 1), "span(2,1) not inside span(3,2)");
  for (unsigned start = 0; start <= 1; ++start) {
    std::size_t previous = 0;
    out.detail << "dims from (" << start << ",0):";
    for (unsigned k = 0; k <= 2; ++k) {
      const auto d = superpoly::bidegree_dimension(ring, inv, start + k, k);
      out.require(d >= previous, "dimension drops along the chain from (" + std::to_string(start) + ",0)");
      previous = d;
      out.detail << " " << d;
    }
    out.detail << "; ";
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"ring identities x x~ = x~ x = Id", ring_identities},
      {"super Cramer rule", cramer},
      {"comultiplication A C = C A = Id, counit", comultiplication},
      {"Berezinian multiplicativity and Ber Ber* = 1", berezinian_laws},
      {"rho_{r,s} is a representation", representation_property},
      {"bidegree span dimension = dim rho image", centralizer_dimension},
      {"mutual centralizers (Schur-Weyl duality)", schur_weyl},
      {"semisimplicity and negative control", semisimplicity},
      {"walled Brauer counts, e^2 = delta e, commutation", walled_brauer},
      {"block count = cross bipartition count", block_counts},
      {"chain inclusion and monotone dimensions", chain_inclusion},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[k].second(out);
    } catch (const std::exception& ex) {
      out.ok = false;
      out.detail.str("");
      out.detail << "exception: " << ex.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!out.ok) ++failures;
    std::printf("[%s] %2zu %-50s %7.1fs  %s\n", out.ok ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), secs,
                out.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
