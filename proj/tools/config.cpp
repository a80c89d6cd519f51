#include "config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "mfunc/error.hpp"

namespace mfunc::cli {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorKind::Config, msg); }

bool same_kind(const json& current, const json& incoming) {
  if (current.is_null()) return true;
  if (current.is_number_integer())
    return incoming.is_number_integer() ||
           (incoming.is_number_float() && std::floor(incoming.get<double>()) == incoming.get<double>());
  if (current.is_number()) return incoming.is_number();
  return current.type() == incoming.type();
}

json coerce(const json& current, const json& incoming) {
  if (current.is_number_integer() && incoming.is_number_float()) return json(std::int64_t(incoming.get<double>()));
  return incoming;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, sep);) out.push_back(item);
  return out;
}

double to_real(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail("cannot read '" + s + "' as a number in " + what);
  }
}

std::vector<double> real_list(const std::string& s, std::size_t count, const std::string& what) {
  const auto parts = split(s, ',');
  if (parts.size() != count) fail(what + " needs " + std::to_string(count) + " comma-separated numbers");
  std::vector<double> out;
  for (const auto& p : parts) out.push_back(to_real(p, what));
  return out;
}

}  // namespace

ExperimentConfig::ExperimentConfig(std::string experiment, json defaults)
    : experiment_(std::move(experiment)), doc_(std::move(defaults)) {
  doc_["experiment"] = experiment_;
  if (!doc_.contains("seed")) doc_["seed"] = nullptr;
  if (!doc_.contains("threads")) doc_["threads"] = 1;
  if (!doc_.contains("tolerances")) doc_["tolerances"] = json::object();
}

void ExperimentConfig::merge_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open config file " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    fail("config file " + path.string() + " is not valid JSON: " + e.what());
  }
  merge(j, path.string());
}

void ExperimentConfig::merge(const json& object, const std::string& origin) {
  if (!object.is_object()) fail(origin + ": config must be a JSON object");
  for (const auto& [key, value] : object.items()) {
    if (key == "experiment") {
      if (value != experiment_)
        fail(origin + ": config is for experiment " + value.dump() + ", not \"" + experiment_ + "\"");
      continue;
    }
    if (key == "tolerances") {
      if (!value.is_object()) fail(origin + ": \"tolerances\" must be an object");
      for (const auto& [name, tol] : value.items()) set_tolerance(name + "=" + tol.dump());
      continue;
    }
    set(key, value);
  }
}

void ExperimentConfig::set(const std::string& key, json value) {
  if (key == "experiment" || key == "tolerances") fail("'" + key + "' cannot be set this way");
  if (!doc_.contains(key)) fail("unknown key '" + key + "' for experiment " + experiment_);
  if (!same_kind(doc_[key], value))
    fail("key '" + key + "' expects a value like " + doc_[key].dump() + ", got " + value.dump());
  doc_[key] = coerce(doc_[key], value);
}

void ExperimentConfig::assign(const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) fail("expected key=value, got '" + assignment + "'");
  const std::string key = assignment.substr(0, eq), raw = assignment.substr(eq + 1);
  json value = json::parse(raw, nullptr, false);
  if (value.is_discarded()) value = raw;
  set(key, value);
}

void ExperimentConfig::set_tolerance(const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) fail("expected name=value, got '" + assignment + "'");
  const std::string name = assignment.substr(0, eq);
  auto& tols = doc_["tolerances"];
  if (!tols.contains(name)) {
    std::string known;
    for (const auto& [k, v] : tols.items()) known += (known.empty() ? "" : ", ") + k;
    fail("unknown tolerance '" + name + "' for experiment " + experiment_ + " (known: " + known + ")");
  }
  const double v = to_real(assignment.substr(eq + 1), "tolerance " + name);
  if (!(v > 0.0) || !std::isfinite(v)) fail("tolerance '" + name + "' must be positive");
  tols[name] = v;
}

const json& ExperimentConfig::at(const std::string& key) const {
  if (!doc_.contains(key)) fail("internal: missing key '" + key + "'");
  return doc_.at(key);
}

double ExperimentConfig::real(const std::string& key) const {
  const auto& v = at(key);
  if (!v.is_number()) fail("key '" + key + "' must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail("key '" + key + "' must be finite");
  return x;
}

double ExperimentConfig::positive(const std::string& key) const {
  const double x = real(key);
  if (!(x > 0.0)) fail("key '" + key + "' must be positive");
  return x;
}

std::int64_t ExperimentConfig::integer(const std::string& key) const {
  const auto& v = at(key);
  if (!v.is_number_integer()) fail("key '" + key + "' must be an integer");
  return v.get<std::int64_t>();
}

std::string ExperimentConfig::text(const std::string& key) const {
  const auto& v = at(key);
  if (!v.is_string()) fail("key '" + key + "' must be a string");
  return v.get<std::string>();
}

bool ExperimentConfig::flag(const std::string& key) const {
  const auto& v = at(key);
  if (!v.is_boolean()) fail("key '" + key + "' must be true or false");
  return v.get<bool>();
}

double ExperimentConfig::tolerance(const std::string& name) const {
  const auto& tols = doc_.at("tolerances");
  if (!tols.contains(name)) fail("internal: missing tolerance '" + name + "'");
  return tols.at(name).get<double>();
}

Complex ExperimentConfig::complex(const std::string& key) const {
  const auto& v = at(key);
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  fail("key '" + key + "' must be a number or [re, im]");
}

std::vector<double> ExperimentConfig::reals(const std::string& key) const {
  const auto& v = at(key);
  if (!v.is_array()) fail("key '" + key + "' must be an array of numbers");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number()) fail("key '" + key + "' must be an array of numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

std::vector<std::int64_t> ExperimentConfig::integers(const std::string& key) const {
  const auto& v = at(key);
  if (!v.is_array()) fail("key '" + key + "' must be an array of integers");
  std::vector<std::int64_t> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) fail("key '" + key + "' must be an array of integers");
    out.push_back(x.get<std::int64_t>());
  }
  return out;
}

std::uint64_t ExperimentConfig::seed() const {
  const auto& v = doc_.at("seed");
  if (v.is_null()) fail("experiment " + experiment_ + " is stochastic and needs --seed (or \"seed\" in the config)");
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) fail("seed must be a nonnegative integer");
  return v.get<std::uint64_t>();
}

PrimeList parse_primes(const json& spec) {
  try {
    if (spec.is_array()) {
      std::vector<std::int64_t> ps;
      for (const auto& x : spec) {
        if (!x.is_number_integer()) fail("prime list entries must be integers");
        ps.push_back(x.get<std::int64_t>());
      }
      return make_prime_list(ps);
    }
    if (!spec.is_string()) fail("primes must be \"first:N\", \"upto:N\", \"list:p,q,...\" or an array");
    const auto s = spec.get<std::string>();
    const auto colon = s.find(':');
    if (colon == std::string::npos) fail("primes spec '" + s + "' needs a 'first:', 'upto:' or 'list:' prefix");
    const std::string kind = s.substr(0, colon), arg = s.substr(colon + 1);
    if (kind == "first" || kind == "upto") {
      const double n = to_real(arg, "primes spec");
      if (n < 1 || std::floor(n) != n) fail("primes spec '" + s + "' needs a positive integer");
      return kind == "first" ? first_primes(std::size_t(n)) : primes_up_to(std::int64_t(n));
    }
    if (kind == "list") {
      std::vector<std::int64_t> ps;
      for (const auto& part : split(arg, ',')) ps.push_back(std::int64_t(to_real(part, "prime list")));
      return make_prime_list(ps);
    }
    fail("unknown primes spec kind '" + kind + "'");
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Config) throw;
    fail(std::string("primes: ") + e.what());
  }
}

TestFunction parse_test_function(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  try {
    if (kind == "gaussian") {
      const auto v = real_list(arg, 3, "gaussian test function");
      return TestFunction::gaussian({v[0], v[1]}, v[2]);
    }
    if (kind == "rect") {
      const auto v = real_list(arg, 4, "rectangle test function");
      return TestFunction::rectangle({v[0], v[1], v[2], v[3]});
    }
    if (kind == "fourier") {
      const auto v = real_list(arg, 2, "fourier test function");
      return TestFunction::fourier_kernel({v[0], v[1]});
    }
    if (colon != std::string::npos) fail("test function '" + kind + "' takes no parameters");
    return TestFunction::builtin(kind);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Config) throw;
    fail(std::string("test function: ") + e.what());
  }
}

PrimitiveFormData load_form(const ExperimentConfig& cfg, std::int64_t max_prime) {
  const auto form = cfg.text("form");
  if (form == "delta") {
    constexpr std::int64_t kDeltaLimit = 1'000'000;
    if (max_prime > kDeltaLimit)
      throw Error(ErrorKind::Coverage, "built-in Delta is tabulated up to " + std::to_string(kDeltaLimit) +
                                           " only; got a request for primes up to " + std::to_string(max_prime) +
                                           " (use form=file:<path> for larger ranges)");
    return delta_form(std::max<std::int64_t>(max_prime, 2));
  }
  if (form.rfind("file:", 0) == 0) {
    try {
      return load_eigenvalue_file(form.substr(5), int(cfg.integer("weight")), cfg.integer("level"));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Data) fail(std::string("form file: ") + e.what());
      throw;
    }
  }
  fail("form must be \"delta\" or \"file:<path>\", got '" + form + "'");
}

}  // namespace mfunc::cli
