#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "mfunc/modular.hpp"
#include "mfunc/primes.hpp"
#include "mfunc/test_function.hpp"
#include "mfunc/types.hpp"

namespace mfunc::cli {

using nlohmann::json;

/// One experiment's parameters. Starts from the experiment's defaults; every
/// later layer (config file, --set, flags) may only touch known keys and must
/// keep each value's JSON type. All failures are ErrorKind::Config.
class ExperimentConfig {
 public:
  ExperimentConfig(std::string experiment, json defaults);

  /// Merges a JSON object; an "experiment" field, if present, must match.
  void merge_file(const std::filesystem::path& path);
  void merge(const json& object, const std::string& origin);
  /// `key=value`; the value is read as JSON when it parses, else as a string.
  void assign(const std::string& assignment);
  void set(const std::string& key, json value);
  /// `name=value` into the "tolerances" object.
  void set_tolerance(const std::string& assignment);

  const std::string& experiment() const noexcept { return experiment_; }
  const json& document() const noexcept { return doc_; }

  double real(const std::string& key) const;
  double positive(const std::string& key) const;
  std::int64_t integer(const std::string& key) const;
  std::string text(const std::string& key) const;
  bool flag(const std::string& key) const;
  double tolerance(const std::string& name) const;
  Complex complex(const std::string& key) const;
  std::vector<double> reals(const std::string& key) const;
  std::vector<std::int64_t> integers(const std::string& key) const;

  /// Mandatory for stochastic experiments.
  std::uint64_t seed() const;

 private:
  const json& at(const std::string& key) const;

  std::string experiment_;
  json doc_;
};

/// "first:N", "upto:N", "list:2,3,5" or a JSON array of primes.
PrimeList parse_primes(const json& spec);
/// "one", "re", "im", "cos-re", "gaussian:u,v,width", "rect:u0,u1,v0,v1", "fourier:a,b".
TestFunction parse_test_function(const std::string& spec);
/// "delta" (tabulated to `max_prime`, at most 10^6, else Coverage) or "file:<path>" with `weight` and `level`.
PrimitiveFormData load_form(const ExperimentConfig& cfg, std::int64_t max_prime);

}  // namespace mfunc::cli
