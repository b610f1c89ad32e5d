#pragma once

// On-disk cache of exact matrix sets, one text file per (m, n, r, s, kind).
//
//   superschur-matrices 1
//   m n r s kind
//   count size
//   then per matrix: its nnz, followed by nnz lines "row col numerator denominator"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "superschur/cli/config.hpp"
#include "superschur/sparse.hpp"

namespace superschur::cli {

struct CacheKey {
  GridPoint point;
  std::string kind;
  [[nodiscard]] std::string filename() const;
};

void write_matrix_set(std::ostream& out, const CacheKey& key, const std::vector<SparseMatrix>& mats);
/// nullopt when the header does not match the key; throws std::runtime_error on corrupt data.
std::optional<std::vector<SparseMatrix>> read_matrix_set(std::istream& in, const CacheKey& key);

class MatrixCache {
 public:
  MatrixCache() = default;  // disabled
  explicit MatrixCache(std::filesystem::path dir);

  [[nodiscard]] bool enabled() const { return !dir_.empty(); }
  [[nodiscard]] std::optional<std::vector<SparseMatrix>> load(const CacheKey& key) const;
  /// Writes to a temporary file in the same directory, then renames over the target.
  void store(const CacheKey& key, const std::vector<SparseMatrix>& mats) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace superschur::cli
