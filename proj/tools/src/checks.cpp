#include "superschur/cli/checks.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <future>
#include <memory>
#include <optional>
#include <random>

#include "superschur/brauer.hpp"
#include "superschur/centralizer.hpp"
#include "superschur/grassmann.hpp"
#include "superschur/liealg.hpp"
#include "superschur/superpoly.hpp"

namespace superschur::cli {

namespace {

using centralizer::MatrixSubalgebra;
using Clock = std::chrono::steady_clock;

const char* ref_for(const std::string& check) {
  if (check == "dims") return "dim of bidegree-(r,s) coefficient span = dim rho_{r,s}(U(gl(m|n)))";
  if (check == "verify-ring") return "inverse, Cramer, coproduct and Berezinian identities of k[GL(m|n)]";
  if (check == "schur-weyl") return "End_B(T) = rho(U) and End_gl(T) = image of B_{r,s}(m-n) when m-n >= r+s";
  if (check == "semisimple") return "rho_{r,s}(U(gl(m|n))) semisimple when m-n >= r+s";
  if (check == "bipartitions") return "blocks of End_gl(T(r,s)) labelled by (m|n)-cross bipartitions";
  return "";
}

bool semisimple_range(const GridPoint& p) {
  return static_cast<long>(p.m) - static_cast<long>(p.n) >= static_cast<long>(p.r + p.s);
}

// Runs body, filling status/values; converts exceptions into report states.
ReportEntry timed(const std::string& check, const GridPoint& p, const std::function<void(ReportEntry&)>& body) {
  ReportEntry e;
  e.check = check;
  e.point = p;
  e.ref = ref_for(check);
  const auto start = Clock::now();
  try {
    body(e);
  } catch (const ResourceLimitExceeded& ex) {
    e.status = Status::skipped;
    e.note = ex.what();
  } catch (const std::exception& ex) {
    e.status = Status::fail;
    e.note = ex.what();
  }
  e.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return e;
}

std::string describe(const superpoly::LocalizedElement& x) {
  return std::to_string(x.numerator().size()) + " terms over d1^" + std::to_string(x.d1_power()) + " d2^" +
         std::to_string(x.d2_power());
}

// Lazily built objects shared by the checks at one grid point.
class PointPipeline {
 public:
  PointPipeline(const GridPoint& p, const SweepConfig& cfg, const MatrixCache& cache)
      : p_(p), dim_{p.m, p.n}, cfg_(cfg), cache_(cache) {}

  const liealg::RepresentationMatrixSet& reps() {
    if (!reps_) {
      const CacheKey key{p_, "rho"};
      const liealg::TensorSpace space(dim_, p_.r, p_.s);
      if (space.size() > cfg_.limits.max_ambient_entries)
        throw ResourceLimitExceeded("tensor space dimension exceeds --max-dim");
      if (auto cached = cache_.load(key); cached && valid_reps(*cached, space)) {
        reps_.emplace(liealg::RepresentationMatrixSet{space, liealg::gl_basis(dim_), std::move(*cached)});
      } else {
        reps_.emplace(liealg::rho_rs(dim_, p_.r, p_.s, cfg_.limits));
        cache_.store(key, reps_->matrices);
      }
    }
    return *reps_;
  }

  const MatrixSubalgebra& rho_image() {
    if (!image_) {
      const auto& rs = reps();
      const std::size_t n = rs.space.size();
      if (n * n > cfg_.limits.max_ambient_entries)
        throw ResourceLimitExceeded("N^2 = " + std::to_string(n * n) + " exceeds --max-dim");
      const CacheKey key{p_, "rho-image"};
      if (auto cached = cache_.load(key)) image_ = rebuild(*cached, rs);
      if (!image_) {
        image_ = liealg::image_algebra(rs, cfg_.limits);
        cache_.store(key, image_->basis());
      }
    }
    return *image_;
  }

  const brauer::BrauerAction& brauer_action() {
    if (!brauer_) {
      const auto& rs = reps();
      if (rs.space.size() * rs.space.size() > cfg_.limits.max_ambient_entries)
        throw ResourceLimitExceeded("N^2 exceeds --max-dim");
      brauer_ = std::make_unique<brauer::BrauerAction>(dim_, p_.r, p_.s, cfg_.limits);
    }
    return *brauer_;
  }

  const MatrixSubalgebra& brauer_image() {
    if (!brauer_image_) brauer_image_ = brauer::image_algebra_brauer(brauer_action(), cfg_.limits);
    return *brauer_image_;
  }

  const MatrixSubalgebra& rho_commutant() {
    if (!rho_commutant_) rho_commutant_ = centralizer::commutant(rho_image(), reps().cartan(), cfg_.limits);
    return *rho_commutant_;
  }

  ReportEntry run(const std::string& check) {
    if (check == "dims") return timed(check, p_, [&](ReportEntry& e) { dims(e); });
    if (check == "schur-weyl") return timed(check, p_, [&](ReportEntry& e) { schur_weyl(e); });
    if (check == "semisimple") return timed(check, p_, [&](ReportEntry& e) { semisimple(e); });
    if (check == "bipartitions") return timed(check, p_, [&](ReportEntry& e) { bipartitions(e); });
    throw std::invalid_argument("unknown check '" + check + "'");
  }

 private:
  static bool valid_reps(const std::vector<SparseMatrix>& mats, const liealg::TensorSpace& space) {
    const std::size_t count = space.dim().total() * space.dim().total();
    if (mats.size() != count) return false;
    return std::all_of(mats.begin(), mats.end(), [&](const SparseMatrix& m) { return m.size() == space.size(); });
  }

  static std::optional<MatrixSubalgebra> rebuild(const std::vector<SparseMatrix>& basis,
                                                 const liealg::RepresentationMatrixSet& rs) {
    const std::size_t n = rs.space.size();
    MatrixSubalgebra a(n, centralizer::Grading::from_diagonals(n, rs.cartan()));
    for (const auto& b : basis) {
      if (b.size() != n) return std::nullopt;
      const auto deg = a.grading().degree_of(b);
      if (!deg || !a.insert(*deg, b)) return std::nullopt;
    }
    a.set_generators(rs.chevalley());
    return a;
  }

  void dims(ReportEntry& e) {
    if (p_.m + p_.n > cfg_.symbolic_bound)
      throw ResourceLimitExceeded("m+n exceeds the symbolic bound " + std::to_string(cfg_.symbolic_bound));
    const auto ring = superpoly::CoordinateRing::create(dim_);
    const auto inverse = superpoly::generic_inverse(ring);
    const std::size_t span = superpoly::bidegree_dimension(ring, inverse, p_.r, p_.s, cfg_.limits);
    const std::size_t image = rho_image().dimension();
    e.values["bidegree_dim"] = span;
    e.values["image_dim"] = image;
    e.status = span == image ? Status::pass : Status::fail;
  }

  void schur_weyl(ReportEntry& e) {
    if (p_.m < p_.n) {
      e.status = Status::not_applicable;
      e.note = "requires m >= n";
      return;
    }
    const auto& cartan = reps().cartan();
    const auto& img = rho_image();
    const auto& bimg = brauer_image();
    const auto comm_b = centralizer::commutant(bimg, cartan, cfg_.limits);
    const auto& comm_rho = rho_commutant();
    const bool first = centralizer::subalgebra_equal(comm_b, img);
    const bool second = centralizer::subalgebra_equal(comm_rho, bimg);
    e.values["image_rho_dim"] = img.dimension();
    e.values["image_brauer_dim"] = bimg.dimension();
    e.values["commutant_brauer_dim"] = comm_b.dimension();
    e.values["commutant_rho_dim"] = comm_rho.dimension();
    e.values["commutant_brauer_eq_image_rho"] = first;
    e.values["commutant_rho_eq_image_brauer"] = second;
    if (semisimple_range(p_)) {
      e.status = first && second ? Status::pass : Status::fail;
    } else {
      e.status = Status::recorded;
      e.note = "m-n < r+s";
    }
  }

  void semisimple(ReportEntry& e) {
    const auto& img = rho_image();
    const auto rad = centralizer::radical(img);
    e.values["image_dim"] = img.dimension();
    e.values["radical_dim"] = rad.basis.size();
    e.values["nilpotency_index"] = rad.nilpotency_index;
    if (semisimple_range(p_)) {
      e.status = rad.basis.empty() ? Status::pass : Status::fail;
    } else {
      e.status = Status::recorded;
      e.note = "m-n < r+s";
    }
  }

  void bipartitions(ReportEntry& e) {
    using combinatorics::CrossMode;
    const auto exact = combinatorics::enumerate_cross(p_.r, p_.s, p_.m, p_.n, CrossMode::exact).size();
    const auto contracted = combinatorics::enumerate_cross(p_.r, p_.s, p_.m, p_.n, CrossMode::contracted).size();
    const auto& comm = rho_commutant();
    const std::size_t blocks = centralizer::center_dimension(comm, cfg_.limits);
    e.values["exact_count"] = exact;
    e.values["contracted_count"] = contracted;
    e.values["blocks"] = blocks;
    e.values["exact_agrees"] = exact == blocks;
    e.values["contracted_agrees"] = contracted == blocks;
    e.values["mode"] = combinatorics::to_string(cfg_.mode);
    if (auto sizes = centralizer::block_dimensions(comm, cfg_.limits)) e.values["block_sizes"] = *sizes;
    if (!semisimple_range(p_)) {
      e.status = Status::recorded;
      e.note = "m-n < r+s";
      return;
    }
    const std::size_t count = cfg_.mode == CrossMode::exact ? exact : contracted;
    e.status = count == blocks ? Status::pass : Status::fail;
    if (exact != contracted) e.note = "exact and contracted counts differ";
  }

  GridPoint p_;
  SuperDim dim_;
  const SweepConfig& cfg_;
  const MatrixCache& cache_;
  std::optional<liealg::RepresentationMatrixSet> reps_;
  std::optional<MatrixSubalgebra> image_;
  std::unique_ptr<brauer::BrauerAction> brauer_;
  std::optional<MatrixSubalgebra> brauer_image_;
  std::optional<MatrixSubalgebra> rho_commutant_;
};

}  // namespace

BerezinianSampleResult berezinian_samples(SuperDim dim, std::size_t samples, std::uint64_t seed,
                                          unsigned generators) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(dim.m), static_cast<std::uint32_t>(dim.n)};
  std::mt19937_64 rng(seq);
  const auto inv = grassmann_inverter();
  BerezinianSampleResult out;
  for (std::size_t k = 0; k < samples; ++k) {
    const auto s = random_even_supermatrix(dim, generators, rng);
    const auto t = random_even_supermatrix(dim, generators, rng);
    const auto st = s * t;
    ++out.samples;
    const auto ber_s = berezinian(s, inv);
    const auto ber_star_s = berezinian_star(s, inv);
    auto fail = [&](bool& flag, const char* what) {
      flag = false;
      if (out.first_failure.empty()) out.first_failure = std::string(what) + " at sample " + std::to_string(k);
    };
    if (!(berezinian(st, inv) == ber_s * berezinian(t, inv))) fail(out.ber_multiplicative, "Ber(ST)");
    if (!(berezinian_star(st, inv) == ber_star_s * berezinian_star(t, inv)))
      fail(out.ber_star_multiplicative, "Ber*(ST)");
    if (!(ber_s * ber_star_s == ber_s.one())) fail(out.ber_times_ber_star, "Ber*Ber*");
  }
  return out;
}

ReportEntry run_verify_ring(unsigned m, unsigned n, const SweepConfig& cfg) {
  const GridPoint p{m, n, 0, 0};
  return timed("verify-ring", p, [&](ReportEntry& e) {
    if (m + n > cfg.symbolic_bound)
      throw ResourceLimitExceeded("m+n exceeds the symbolic bound " + std::to_string(cfg.symbolic_bound));
    const SuperDim dim{m, n};
    const auto ring = superpoly::CoordinateRing::create(dim);
    const auto x = superpoly::generic_matrix(ring);
    const auto inverse = superpoly::generic_inverse(ring);
    const std::size_t size = dim.total();
    std::string failure;
    auto note = [&](const std::string& what, std::size_t i, std::size_t j, const std::string& diff) {
      if (failure.empty())
        failure = what + " at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): difference " + diff;
    };

    bool left = true;
    bool right = true;
    bool cramer = true;
    bool counit = true;
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        const auto delta = superpoly::LocalizedElement::constant(ring, i == j ? 1 : 0);
        auto sum_l = delta.zero();
        auto sum_r = delta.zero();
        for (std::size_t k = 0; k < size; ++k) {
          sum_l = sum_l + x(i, k) * inverse(k, j);
          sum_r = sum_r + inverse(i, k) * x(k, j);
        }
        if (!(sum_l == delta)) {
          left = false;
          note("sum_k x_ik x~_kj", i, j, describe(sum_l - delta));
        }
        if (!(sum_r == delta)) {
          right = false;
          note("sum_k x~_ik x_kj", i, j, describe(sum_r - delta));
        }
        const auto c = superpoly::cramer_entry(ring, i, j);
        if (!(c == inverse(i, j))) {
          cramer = false;
          note("Cramer", i, j, describe(c - inverse(i, j)));
        }
        if (inverse(i, j).counit() != (i == j ? 1 : 0)) {
          counit = false;
          note("counit of x~", i, j, "nonzero");
        }
      }
    }

    bool coproduct = true;
    const auto ac_all = superpoly::coproduct_products(ring, inverse, false);
    const auto ca_all = superpoly::coproduct_products(ring, inverse, true);
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        const auto id = i == j ? superpoly::TensorSquareElement::one(ring) : superpoly::TensorSquareElement(ring);
        const auto& ac = ac_all[i * size + j];
        const auto& ca = ca_all[i * size + j];
        if (!(ac == id)) {
          coproduct = false;
          note("A.C", i, j, std::to_string((ac - id).terms().size()) + " terms");
        }
        if (!(ca == id)) {
          coproduct = false;
          note("C.A", i, j, std::to_string((ca - id).terms().size()) + " terms");
        }
      }
    }

    const bool coassociative = superpoly::check_coassociativity(dim);
    const bool counit_laws = superpoly::check_counit_laws(dim);
    const bool twist = superpoly::twist_isomorphism_check(dim);
    const auto ber = berezinian_samples(dim, cfg.samples, cfg.seed);
    if (!ber.ok() && failure.empty()) failure = ber.first_failure;

    e.values["inverse_left"] = left;
    e.values["inverse_right"] = right;
    e.values["cramer"] = cramer;
    e.values["coproduct_inverse"] = coproduct;
    e.values["counit_inverse"] = counit;
    e.values["coassociative"] = coassociative;
    e.values["counit_laws"] = counit_laws;
    e.values["twist"] = twist;
    e.values["ber_samples"] = ber.samples;
    e.values["ber_multiplicative"] = ber.ber_multiplicative;
    e.values["ber_star_multiplicative"] = ber.ber_star_multiplicative;
    e.values["ber_times_ber_star"] = ber.ber_times_ber_star;
    const bool ok = left && right && cramer && coproduct && counit && coassociative && counit_laws && twist && ber.ok();
    e.status = ok ? Status::pass : Status::fail;
    if (!ok) e.note = failure.empty() ? "structure map check failed" : failure;
  });
}

std::vector<ReportEntry> run_point(const GridPoint& p, const std::vector<std::string>& checks, const SweepConfig& cfg,
                                   const MatrixCache& cache) {
  PointPipeline pipeline(p, cfg, cache);
  std::vector<ReportEntry> out;
  for (const auto& check : checks) out.push_back(pipeline.run(check));
  return out;
}

std::vector<ReportEntry> run_sweep(const std::vector<std::string>& checks, const SweepConfig& cfg) {
  const MatrixCache cache = cfg.cache_dir.empty() ? MatrixCache() : MatrixCache(cfg.cache_dir);
  std::vector<std::string> point_checks;
  bool ring = false;
  for (const auto& c : checks) {
    if (c == "verify-ring") {
      ring = true;
    } else if (std::find(kPointChecks.begin(), kPointChecks.end(), c) != kPointChecks.end()) {
      point_checks.push_back(c);
    } else {
      throw ConfigError("unknown check '" + c + "'");
    }
  }

  std::vector<std::function<std::vector<ReportEntry>()>> tasks;
  if (ring) {
    for (const auto& [m, n] : cfg.superdims())
      tasks.emplace_back([&cfg, m = m, n = n] { return std::vector<ReportEntry>{run_verify_ring(m, n, cfg)}; });
  }
  if (!point_checks.empty()) {
    for (const auto& p : cfg.grid())
      tasks.emplace_back([&, p] { return run_point(p, point_checks, cfg, cache); });
  }

  std::vector<std::vector<ReportEntry>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) results[k] = tasks[k]();
  };
  const unsigned jobs = std::min<std::size_t>(cfg.effective_jobs(), std::max<std::size_t>(tasks.size(), 1));
  std::vector<std::future<void>> workers;
  for (unsigned j = 1; j < jobs; ++j) workers.push_back(std::async(std::launch::async, worker));
  worker();
  for (auto& w : workers) w.get();

  std::vector<ReportEntry> out;
  for (auto& r : results) out.insert(out.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
  sort_canonical(out);
  return out;
}

}  // namespace superschur::cli
