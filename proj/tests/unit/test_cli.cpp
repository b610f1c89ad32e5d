#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "superschur/cli/app.hpp"
#include "superschur/cli/cache.hpp"
#include "superschur/cli/checks.hpp"
#include "superschur/liealg.hpp"

using namespace superschur;
using namespace superschur::cli;

namespace {

int run_args(std::vector<std::string> args, std::string* out_text = nullptr) {
  args.insert(args.begin(), "superschur");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  if (out_text) *out_text = out.str();
  return code;
}

std::filesystem::path temp_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("superschur_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("range parsing") {
  CHECK(parse_range("3") == std::vector<unsigned>{3});
  CHECK(parse_range("1..3") == std::vector<unsigned>{1, 2, 3});
  CHECK(parse_range("4,0,2..3") == std::vector<unsigned>{0, 2, 3, 4});
  CHECK_THROWS_AS(parse_range("3..1"), ConfigError);
  CHECK_THROWS_AS(parse_range("a"), ConfigError);
  CHECK_THROWS_AS(parse_range(""), ConfigError);
  SweepConfig cfg;
  cfg.m = {1, 2};
  cfg.n = {0};
  cfg.r = {1};
  cfg.s = {0, 1};
  CHECK(cfg.grid().size() == 4);
  CHECK(cfg.superdims().size() == 2);
}

TEST_CASE("report entries round-trip through JSON lines") {
  ReportEntry a;
  a.check = "dims";
  a.point = {3, 1, 1, 1};
  a.status = Status::pass;
  a.ref = "claim";
  a.values = {{"image_dim", 226}, {"ok", true}, {"sizes", {15, 1}}};
  a.seconds = 0.1 + 0.2;
  ReportEntry b = a;
  b.check = "verify-ring";
  b.status = Status::skipped;
  b.note = "bound, \"quoted\"";
  std::istringstream in(to_jsonl({a, b}));
  const auto back = parse_jsonl(in);
  REQUIRE(back.size() == 2);
  CHECK(back[0] == a);
  CHECK(back[1] == b);
  std::istringstream bad("{\"check\":1}\n");
  CHECK_THROWS_AS(parse_jsonl(bad), std::invalid_argument);

  const auto csv = format_csv({a, b});
  CHECK(csv.rfind("check,m,n,r,s,status,image_dim,ok,sizes,time,note\n", 0) == 0);
  CHECK(csv.find("\"bound, \"\"quoted\"\"\"") != std::string::npos);
  CHECK(format_table({a}).find("image_dim=226") != std::string::npos);

  std::vector<ReportEntry> shuffled = {b, a};
  sort_canonical(shuffled);
  CHECK(shuffled.front().check == "dims");
  CHECK(exit_code({a}, true) == 0);
  CHECK(exit_code({a, b}, false) == 0);
  CHECK(exit_code({a, b}, true) == 3);
  b.status = Status::fail;
  CHECK(exit_code({a, b}, true) == 1);
}

TEST_CASE("matrix cache round-trip is exact") {
  const auto reps = liealg::rho_rs({2, 1}, 1, 1);
  std::vector<SparseMatrix> mats = reps.matrices;
  SparseMatrix odd(9);
  odd.add_to(2, 7, Rational(-22, 7));
  odd.add_to(8, 0, Rational(1, 3));
  mats.push_back(odd);
  const CacheKey key{{2, 1, 1, 1}, "rho"};

  std::stringstream buffer;
  write_matrix_set(buffer, key, mats);
  const auto back = read_matrix_set(buffer, key);
  REQUIRE(back.has_value());
  CHECK(*back == mats);
  std::stringstream again(buffer.str());
  CHECK_FALSE(read_matrix_set(again, CacheKey{{2, 1, 1, 2}, "rho"}).has_value());

  const auto dir = temp_dir("cache");
  const MatrixCache cache(dir);
  CHECK_FALSE(cache.load(key).has_value());
  cache.store(key, mats);
  CHECK(cache.load(key) == mats);
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& f : std::filesystem::directory_iterator(dir)) ++files;
  CHECK(files == 1);  // no temporaries left behind
  {
    std::ofstream corrupt(dir / key.filename(), std::ios::trunc);
    corrupt << "superschur-matrices 1\n2 1 1 1 rho\n1 9\n1\n0 0 1 0\n";
  }
  CHECK_FALSE(cache.load(key).has_value());
  std::filesystem::remove_all(dir);
}

TEST_CASE("point checks") {
  SweepConfig cfg;
  const auto entries = run_point({3, 1, 1, 1}, kPointChecks, cfg, MatrixCache());
  REQUIRE(entries.size() == 4);
  for (const auto& e : entries) CHECK(e.status == Status::pass);
  CHECK(entries[0].values.at("image_dim") == 226);
  CHECK(entries[3].values.at("exact_count") == 1);
  CHECK(entries[3].values.at("contracted_count") == 2);

  const auto low = run_point({1, 1, 1, 1}, {"schur-weyl", "semisimple"}, cfg, MatrixCache());
  CHECK(low[0].status == Status::recorded);
  CHECK(low[1].status == Status::recorded);
  CHECK(low[1].values.at("radical_dim").get<std::size_t>() > 0);

  CHECK(run_point({1, 2, 1, 1}, {"schur-weyl"}, cfg, MatrixCache())[0].status == Status::not_applicable);

  cfg.limits.max_ambient_entries = 50;
  CHECK(run_point({2, 1, 1, 1}, {"semisimple"}, cfg, MatrixCache())[0].status == Status::skipped);
}

TEST_CASE("sweeps are deterministic and use the cache consistently") {
  SweepConfig cfg;
  cfg.m = {1, 2};
  cfg.n = {0, 1};
  cfg.r = {1};
  cfg.s = {0, 1};
  cfg.samples = 5;
  cfg.jobs = 3;
  const std::vector<std::string> checks = {"dims", "verify-ring", "semisimple", "bipartitions"};
  auto first = run_sweep(checks, cfg);
  cfg.cache_dir = temp_dir("sweep").string();
  auto second = run_sweep(checks, cfg);
  auto third = run_sweep(checks, cfg);  // served from the cache
  REQUIRE(first.size() == second.size());
  REQUIRE(first.size() == third.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].check == third[i].check);
    CHECK(first[i].point == third[i].point);
    CHECK(first[i].status == third[i].status);
    CHECK(first[i].values == second[i].values);
    CHECK(first[i].values == third[i].values);
  }
  std::filesystem::remove_all(cfg.cache_dir);
  CHECK_THROWS_AS(run_sweep({"nonsense"}, cfg), ConfigError);
}

TEST_CASE("berezinian samples") {
  const auto res = berezinian_samples({2, 2}, 10, 99);
  CHECK(res.samples == 10);
  CHECK(res.ok());
}

TEST_CASE("command line exit codes") {
  std::string out;
  CHECK(run_args({"dims", "--m", "1", "--n", "1", "--r", "1", "--s", "0"}, &out) == 0);
  CHECK(out.find("pass") != std::string::npos);
  CHECK(run_args({"dims", "--m", "bad"}) == 2);
  CHECK(run_args({"dims", "--mode", "sideways"}) == 2);
  CHECK(run_args({"nosuchcommand"}) == 2);
  CHECK(run_args({"bipartitions", "--m", "3", "--n", "1", "--r", "1", "--s", "1", "--mode", "exact"}) == 1);
  CHECK(run_args({"dims", "--m", "6", "--n", "0", "--r", "1", "--strict"}) == 3);
  CHECK(run_args({"dims", "--m", "6", "--n", "0", "--r", "1"}) == 0);
  CHECK(run_args({"verify-ring", "--m", "1", "--n", "0", "--samples", "3", "--format", "jsonl"}, &out) == 0);
  CHECK(out.find("\"check\":\"verify-ring\"") != std::string::npos);

  const auto dir = temp_dir("cli");
  {
    std::ofstream cfg(dir / "sweep.ini");
    cfg << "# sweep\nm=2\nn=0\nr=1\ns=1\nformat=jsonl\n";
  }
  const auto report = (dir / "report.jsonl").string();
  CHECK(run_args({"schur-weyl", "--config", (dir / "sweep.ini").string(), "--output", report}) == 0);
  CHECK(run_args({"report", "--from", report, "--format", "csv"}, &out) == 0);
  CHECK(out.find("schur-weyl,2,0,1,1,pass") != std::string::npos);
  CHECK(run_args({"report", "--from", (dir / "missing.jsonl").string()}) == 2);
  std::filesystem::remove_all(dir);
}
