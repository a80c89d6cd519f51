#include "mfunc/modular.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "mfunc/error.hpp"

namespace mfunc {

std::string to_string(Int128 value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  // magnitude as unsigned to cover the most negative value
  unsigned __int128 mag = negative ? static_cast<unsigned __int128>(-(value + 1)) + 1
                                   : static_cast<unsigned __int128>(value);
  std::string digits;
  while (mag > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::vector<Int128> ramanujan_tau_table(std::int64_t N) {
  require(N >= 1, ErrorKind::Domain, "ramanujan_tau_table needs N >= 1");
  // Jacobi: ∏(1−q^n)^3 = Σ_{k≥0} (−1)^k (2k+1) q^{k(k+1)/2}; Δ = q·(that)^8.
  const std::size_t len = static_cast<std::size_t>(N);  // coefficients of q^0 … q^{N−1}
  std::vector<std::pair<std::size_t, std::int64_t>> cube;
  for (std::int64_t k = 0;; ++k) {
    const auto e = static_cast<std::size_t>(k * (k + 1) / 2);
    if (e >= len) break;
    cube.emplace_back(e, (k % 2 ? -1 : 1) * (2 * k + 1));
  }
  std::vector<Int128> acc(len, 0);
  for (auto [e, c] : cube) acc[e] = c;
  std::vector<Int128> next(len);
  for (int power = 2; power <= 8; ++power) {
    std::fill(next.begin(), next.end(), Int128{0});
    for (auto [e, c] : cube) {
      const Int128 coeff = c;
      for (std::size_t i = 0; i + e < len; ++i) {
        if (acc[i] == 0) continue;
        Int128 prod;
        if (__builtin_mul_overflow(acc[i], coeff, &prod) ||
            __builtin_add_overflow(next[i + e], prod, &next[i + e]))
          throw Error(ErrorKind::Range, "tau table overflows 128-bit integers at N = " + std::to_string(N));
      }
    }
    acc.swap(next);
  }
  std::vector<Int128> tau(static_cast<std::size_t>(N) + 1, 0);
  for (std::size_t n = 1; n <= len; ++n) tau[n] = acc[n - 1];
  return tau;
}

SatakePair satake_pair(double lambda) {
  require(std::abs(lambda) <= 2.0, ErrorKind::Domain,
          "Ramanujan bound violated: |lambda| = " + std::to_string(std::abs(lambda)) + " > 2");
  const double im = std::sqrt(std::max(0.0, 1.0 - 0.25 * lambda * lambda));
  const Complex alpha{0.5 * lambda, im};
  return {alpha, std::conj(alpha)};
}

std::int64_t PrimitiveFormData::tabulated_limit() const {
  std::int64_t limit = 1;
  std::int64_t expected = 2;
  for (const auto& [p, lam] : eigenvalues) {
    if (p != expected) break;
    expected = p + 1;
    while (!is_prime(expected)) ++expected;
    limit = expected - 1;
  }
  return limit;
}

double PrimitiveFormData::lambda(std::int64_t p) const {
  auto it = eigenvalues.find(p);
  require(it != eigenvalues.end(), ErrorKind::Coverage,
          "no eigenvalue tabulated for p = " + std::to_string(p) + " (" + name + ")");
  return it->second;
}

const SatakePair& PrimitiveFormData::satake_at(std::int64_t p) const {
  require(!divides_level(p), ErrorKind::Precondition,
          "p = " + std::to_string(p) + " divides the level; no Satake pair");
  auto it = satake.find(p);
  require(it != satake.end(), ErrorKind::Coverage,
          "no eigenvalue tabulated for p = " + std::to_string(p) + " (" + name + ")");
  return it->second;
}

PrimitiveFormData delta_form(std::int64_t max_prime) {
  require(max_prime >= 2, ErrorKind::Domain, "delta_form needs max_prime >= 2");
  const auto tau = ramanujan_tau_table(max_prime);
  PrimitiveFormData f;
  f.name = "Delta";
  f.weight = 12;
  f.level = 1;
  for (auto p : primes_up_to(max_prime)) {
    const double lam = static_cast<double>(static_cast<long double>(tau[p]) /
                                           std::pow(static_cast<long double>(p), 5.5L));
    f.eigenvalues[p] = lam;
    f.satake[p] = satake_pair(lam);
    f.integer_coeffs[p] = tau[p];
  }
  return f;
}

PrimitiveFormData load_eigenvalue_file(const std::filesystem::path& path, int weight,
                                       std::int64_t level) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorKind::Data, "cannot open eigenvalue file " + path.string());
  require(level >= 1, ErrorKind::Data, "level must be positive");
  PrimitiveFormData f;
  f.name = path.filename().string();
  f.weight = weight;
  f.level = level;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    const auto where = path.string() + ":" + std::to_string(lineno);
    require(tab != std::string::npos, ErrorKind::Data, where + ": expected p<TAB>lambda");
    std::int64_t p = 0;
    double lam = 0.0;
    try {
      std::size_t used = 0;
      p = std::stoll(line.substr(0, tab), &used);
      require(used == tab, ErrorKind::Data, where + ": bad prime field");
      const auto rest = line.substr(tab + 1);
      lam = std::stod(rest, &used);
      require(used == rest.size(), ErrorKind::Data, where + ": bad lambda field");
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::Data, where + ": unparsable record");
    }
    require(is_prime(p), ErrorKind::Data, where + ": " + std::to_string(p) + " is not prime");
    require(!f.eigenvalues.contains(p), ErrorKind::Data, where + ": duplicate prime " + std::to_string(p));
    require(std::isfinite(lam), ErrorKind::Data, where + ": non-finite lambda");
    f.eigenvalues[p] = lam;
    if (!f.divides_level(p)) {
      require(std::abs(lam) <= 2.0, ErrorKind::Data, where + ": |lambda| > 2 violates the Ramanujan bound");
      f.satake[p] = satake_pair(lam);
    }
  }
  return f;
}

}  // namespace mfunc
