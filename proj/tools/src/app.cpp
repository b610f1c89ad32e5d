#include "superschur/cli/app.hpp"

#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "superschur/cli/checks.hpp"

namespace superschur::cli {

namespace {

struct Options {
  std::string m = "1";
  std::string n = "1";
  std::string r = "1";
  std::string s = "0";
  std::size_t max_dim = ResourceLimits{}.max_ambient_entries;
  unsigned symbolic_bound = 4;
  std::string cache_dir;
  std::uint64_t seed = SweepConfig{}.seed;
  std::size_t samples = 100;
  std::string mode = "contracted";
  bool strict = false;
  unsigned jobs = 0;
  std::string format = "table";
  std::string output;
  std::string from;
};

SweepConfig to_config(const Options& o) {
  SweepConfig cfg;
  cfg.m = parse_range(o.m);
  cfg.n = parse_range(o.n);
  cfg.r = parse_range(o.r);
  cfg.s = parse_range(o.s);
  cfg.limits.max_ambient_entries = o.max_dim;
  cfg.symbolic_bound = o.symbolic_bound;
  cfg.cache_dir = o.cache_dir;
  cfg.seed = o.seed;
  cfg.samples = o.samples;
  try {
    cfg.mode = combinatorics::parse_cross_mode(o.mode);
  } catch (const std::invalid_argument& ex) {
    throw ConfigError(ex.what());
  }
  cfg.strict = o.strict;
  cfg.jobs = o.jobs;
  return cfg;
}

std::string render(const std::vector<ReportEntry>& entries, const std::string& format) {
  if (format == "jsonl") return to_jsonl(entries);
  if (format == "csv") return format_csv(entries);
  return format_table(entries);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact checks of mixed tensor Schur-Weyl duality for gl(m|n)", "superschur"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value file with any of the long options");
  app.add_option("--m", o.m, "even dimension: value, a..b, or comma list")->capture_default_str();
  app.add_option("--n", o.n, "odd dimension")->capture_default_str();
  app.add_option("--r", o.r, "copies of V")->capture_default_str();
  app.add_option("--s", o.s, "copies of the dual W")->capture_default_str();
  app.add_option("--max-dim", o.max_dim, "bound on ambient matrix entries N*N")->capture_default_str();
  app.add_option("--symbolic-bound", o.symbolic_bound, "largest m+n for symbolic ring checks")
      ->capture_default_str();
  app.add_option("--cache-dir", o.cache_dir, "directory for cached matrix sets");
  app.add_option("--seed", o.seed, "seed for random Berezinian samples")->capture_default_str();
  app.add_option("--samples", o.samples, "random Berezinian samples")->capture_default_str();
  app.add_option("--mode", o.mode, "bipartition mode")
      ->check(CLI::IsMember({"exact", "contracted"}))
      ->capture_default_str();
  app.add_flag("--strict", o.strict, "exit 3 when a check is skipped by a resource guard");
  app.add_option("--jobs", o.jobs, "grid points run concurrently (0 = all cores)")->capture_default_str();
  app.add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"table", "jsonl", "csv"}))
      ->capture_default_str();
  app.add_option("--output", o.output, "write the report here instead of stdout");

  const std::map<std::string, std::string> descriptions = {
      {"dims", "compare coefficient-span and image dimensions"},
      {"verify-ring", "symbolic identities of the coordinate superalgebra"},
      {"schur-weyl", "double centralizer between gl(m|n) and the walled Brauer algebra"},
      {"semisimple", "radical of the image of U(gl(m|n))"},
      {"bipartitions", "cross-bipartition counts against block counts"},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, text] : descriptions) subs[name] = app.add_subcommand(name, text);
  auto* report = app.add_subcommand("report", "run every check, or re-render an existing JSONL report");
  report->add_option("--from", o.from, "JSONL report to re-render");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const SweepConfig cfg = to_config(o);
    std::vector<ReportEntry> entries;
    if (report->parsed() && !o.from.empty()) {
      std::ifstream in(o.from);
      if (!in) throw ConfigError("cannot read " + o.from);
      try {
        entries = parse_jsonl(in);
      } catch (const std::invalid_argument& ex) {
        throw ConfigError(o.from + ": " + ex.what());
      }
      sort_canonical(entries);
    } else {
      std::vector<std::string> checks;
      if (report->parsed()) {
        checks = {"dims", "verify-ring", "schur-weyl", "semisimple", "bipartitions"};
      } else {
        for (const auto& [name, sub] : subs)
          if (sub->parsed()) checks.push_back(name);
      }
      entries = run_sweep(checks, cfg);
    }
    const std::string text = render(entries, o.format);
    if (o.output.empty()) {
      out << text;
    } else {
      std::ofstream file(o.output, std::ios::trunc);
      if (!(file << text)) throw ConfigError("cannot write " + o.output);
    }
    return exit_code(entries, cfg.strict);
  } catch (const ConfigError& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::filesystem::filesystem_error& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  }
}

}  // namespace superschur::cli
