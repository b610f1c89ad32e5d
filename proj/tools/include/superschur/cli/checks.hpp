#pragma once

// The individual checks behind each subcommand, and the concurrent sweep runner.

#include <cstdint>
#include <string>
#include <vector>

#include "superschur/cli/cache.hpp"
#include "superschur/cli/config.hpp"
#include "superschur/cli/report.hpp"
#include "superschur/superlinalg.hpp"

namespace superschur::cli {

/// Checks evaluated per grid point, in report order.
inline const std::vector<std::string> kPointChecks = {"dims", "schur-weyl", "semisimple", "bipartitions"};

struct BerezinianSampleResult {
  std::size_t samples = 0;
  bool ber_multiplicative = true;
  bool ber_star_multiplicative = true;
  bool ber_times_ber_star = true;
  std::string first_failure;
  [[nodiscard]] bool ok() const { return ber_multiplicative && ber_star_multiplicative && ber_times_ber_star; }
};

/// Ber(ST) = Ber(S)Ber(T), the same for Ber*, and Ber(S)Ber*(S) = 1 on random even
/// supermatrices over a Grassmann ring with `generators` odd generators.
BerezinianSampleResult berezinian_samples(SuperDim dim, std::size_t samples, std::uint64_t seed,
                                          unsigned generators = 4);

/// Symbolic identities of the coordinate ring at (m|n) plus Berezinian samples.
ReportEntry run_verify_ring(unsigned m, unsigned n, const SweepConfig& cfg);

/// Runs the named point checks at p, sharing intermediate algebras between them.
std::vector<ReportEntry> run_point(const GridPoint& p, const std::vector<std::string>& checks, const SweepConfig& cfg,
                                   const MatrixCache& cache);

/// Every requested check over the grid; grid points run concurrently. Canonically sorted.
std::vector<ReportEntry> run_sweep(const std::vector<std::string>& checks, const SweepConfig& cfg);

}  // namespace superschur::cli
