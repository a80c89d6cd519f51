#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "experiments.hpp"
#include "mfunc/error.hpp"
#include "mfunc/parallel.hpp"

namespace {

namespace fs = std::filesystem;
using mfunc::Error;
using mfunc::ErrorKind;
using mfunc::cli::json;

struct CommonOptions {
  std::string config;
  std::optional<std::int64_t> seed;
  std::string out = ".";
  std::optional<std::int64_t> threads;
  std::vector<std::string> tolerances;
  std::vector<std::string> sets;
};

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Config:
    case ErrorKind::Data:
      return 2;
    case ErrorKind::Precondition:
    case ErrorKind::Domain:
    case ErrorKind::Method:
    case ErrorKind::Geometry:
      return 3;
    case ErrorKind::Precision:
    case ErrorKind::Coverage:
    case ErrorKind::Range:
      return 4;
  }
  return 1;
}

void print_error(std::string_view kind, const std::string& message) {
  std::cerr << json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << "\n";
}

int run(const mfunc::cli::Experiment& ex, const CommonOptions& o) {
  mfunc::cli::ExperimentConfig cfg(ex.name, ex.defaults);
  if (!o.config.empty()) cfg.merge_file(o.config);
  for (const auto& s : o.sets) cfg.assign(s);
  for (const auto& t : o.tolerances) cfg.set_tolerance(t);
  if (o.seed) cfg.set("seed", *o.seed);
  if (o.threads) cfg.set("threads", *o.threads);

  const auto threads = cfg.integer("threads");
  if (threads < 1 || threads > 1024) throw Error(ErrorKind::Config, "threads must be in [1, 1024]");
  mfunc::set_thread_count(unsigned(threads));

  const fs::path out = o.out;
  std::error_code ec;
  fs::create_directories(out, ec);
  if (ec || !fs::is_directory(out)) throw Error(ErrorKind::Config, "cannot create output directory " + out.string());

  mfunc::cli::Report report(cfg);
  const auto start = std::chrono::steady_clock::now();
  ex.run(cfg, out, report);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  report.write(out, elapsed.count());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Value-distribution experiments for M-functions of zeta and L-functions", "mfunc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(MFUNC_VERSION));

  CommonOptions opts;
  const mfunc::cli::Experiment* chosen = nullptr;
  for (const auto& ex : mfunc::cli::experiments()) {
    auto* sub = app.add_subcommand(ex.name, ex.summary);
    sub->add_option("--config", opts.config, "JSON config file")->check(CLI::ExistingFile);
    sub->add_option("--seed", opts.seed, "RNG seed for stochastic steps");
    sub->add_option("--out", opts.out, "output directory")->capture_default_str();
    sub->add_option("--threads", opts.threads, "worker threads");
    sub->add_option("--tolerance", opts.tolerances, "name=value tolerance override (repeatable)");
    sub->add_option("--set", opts.sets, "key=value parameter override (repeatable)");
    std::string keys;
    for (const auto& [k, v] : ex.defaults.items()) keys += "  " + k + " = " + v.dump() + "\n";
    sub->footer("Parameters and defaults:\n" + keys);
    sub->callback([&chosen, &ex] { chosen = &ex; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    print_error("Config", e.what());
    return 2;
  }

  try {
    return run(*chosen, opts);
  } catch (const Error& e) {
    print_error(mfunc::to_string(e.kind()), e.what());
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    print_error("Internal", e.what());
    return 1;
  }
}
