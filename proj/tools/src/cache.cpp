#include "superschur/cli/cache.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <unistd.h>

namespace superschur::cli {

namespace {

constexpr const char* kMagic = "superschur-matrices";
constexpr int kVersion = 1;

}  // namespace

std::string CacheKey::filename() const {
  return "m" + std::to_string(point.m) + "_n" + std::to_string(point.n) + "_r" + std::to_string(point.r) + "_s" +
         std::to_string(point.s) + "_" + kind + ".txt";
}

void write_matrix_set(std::ostream& out, const CacheKey& key, const std::vector<SparseMatrix>& mats) {
  const std::size_t size = mats.empty() ? 0 : mats.front().size();
  out << kMagic << " " << kVersion << "\n";
  out << key.point.m << " " << key.point.n << " " << key.point.r << " " << key.point.s << " " << key.kind << "\n";
  out << mats.size() << " " << size << "\n";
  for (const auto& m : mats) {
    if (m.size() != size) throw std::invalid_argument("write_matrix_set: matrices of different sizes");
    out << m.nnz() << "\n";
    m.for_each([&](std::size_t i, std::size_t j, const Rational& v) {
      out << i << " " << j << " " << v.get_num().get_str() << " " << v.get_den().get_str() << "\n";
    });
  }
}

std::optional<std::vector<SparseMatrix>> read_matrix_set(std::istream& in, const CacheKey& key) {
  std::string magic;
  int version = 0;
  GridPoint p;
  std::string kind;
  if (!(in >> magic >> version) || magic != kMagic || version != kVersion) return std::nullopt;
  if (!(in >> p.m >> p.n >> p.r >> p.s >> kind) || p != key.point || kind != key.kind) return std::nullopt;
  std::size_t count = 0;
  std::size_t size = 0;
  if (!(in >> count >> size)) throw std::runtime_error("matrix cache: truncated header");
  std::vector<SparseMatrix> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    std::size_t nnz = 0;
    if (!(in >> nnz)) throw std::runtime_error("matrix cache: truncated file");
    std::vector<std::vector<SparseVector::Entry>> rows(size);
    for (std::size_t e = 0; e < nnz; ++e) {
      std::size_t i = 0;
      std::size_t j = 0;
      std::string num;
      std::string den;
      if (!(in >> i >> j >> num >> den) || i >= size || j >= size)
        throw std::runtime_error("matrix cache: bad entry");
      Rational v;
      try {
        const mpz_class d(den);
        if (sgn(d) == 0) throw std::invalid_argument("zero denominator");
        v = Rational(mpz_class(num), d);
      } catch (const std::invalid_argument&) {
        throw std::runtime_error("matrix cache: bad number");
      }
      v.canonicalize();
      rows[i].emplace_back(static_cast<SparseVector::Index>(j), std::move(v));
    }
    SparseMatrix m(size);
    for (std::size_t i = 0; i < size; ++i)
      if (!rows[i].empty()) m.set_row(i, SparseVector(std::move(rows[i])));
    out.push_back(std::move(m));
  }
  return out;
}

MatrixCache::MatrixCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  if (!dir_.empty()) std::filesystem::create_directories(dir_);
}

std::optional<std::vector<SparseMatrix>> MatrixCache::load(const CacheKey& key) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(dir_ / key.filename());
  if (!in) return std::nullopt;
  try {
    return read_matrix_set(in, key);
  } catch (const std::runtime_error&) {
    return std::nullopt;  // treated as a miss; the next store overwrites it
  }
}

void MatrixCache::store(const CacheKey& key, const std::vector<SparseMatrix>& mats) const {
  if (!enabled()) return;
  static std::atomic<unsigned long> counter{0};
  std::ostringstream tmp_name;
  tmp_name << "." << key.filename() << "." << ::getpid() << "." << std::hash<std::thread::id>{}(std::this_thread::get_id())
           << "." << counter++ << ".tmp";
  const auto tmp = dir_ / tmp_name.str();
  {
    std::ofstream out(tmp, std::ios::trunc);
    write_matrix_set(out, key, mats);
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw std::runtime_error("matrix cache: cannot write " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, dir_ / key.filename());
}

}  // namespace superschur::cli
