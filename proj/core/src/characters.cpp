#include "mfunc/characters.hpp"

#include <cmath>

#include "mfunc/error.hpp"
#include "mfunc/euler.hpp"

namespace mfunc {

namespace {

std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t m) {
  __int128 r = 1, x = b % m;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
  }
  return std::int64_t(r);
}

}  // namespace

std::int64_t primitive_root(std::int64_t q) {
  require(q >= 2 && is_prime(q), ErrorKind::Domain, "primitive_root needs a prime modulus");
  if (q == 2) return 1;
  const auto factors = factorize(q - 1);
  for (std::int64_t g = 2; g < q; ++g) {
    bool ok = true;
    for (const auto& [r, e] : factors)
      if (pow_mod(g, (q - 1) / r, q) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw Error(ErrorKind::Domain, "no primitive root found");
}

DirichletCharacterTable build_character_table(std::int64_t q) {
  require(q >= 3 && is_prime(q), ErrorKind::Domain,
          "build_character_table needs a prime q >= 3, got " + std::to_string(q));
  DirichletCharacterTable t;
  t.q = q;
  t.g = primitive_root(q);
  t.dlog.assign(std::size_t(q), -1);
  std::int64_t a = 1;
  for (std::int64_t k = 0; k < q - 1; ++k) {
    t.dlog[std::size_t(a)] = k;
    a = a * t.g % q;
  }
  return t;
}

Complex DirichletCharacterTable::value(std::int64_t j, std::int64_t a) const {
  std::int64_t r = a % q;
  if (r < 0) r += q;
  if (r == 0) return {0.0, 0.0};
  // Reduce jk mod q−1 before scaling so the phase stays exact for large q.
  const std::int64_t m = q - 1;
  const std::int64_t jk = ((j % m + m) % m) * dlog[std::size_t(r)] % m;
  return std::polar(1.0, kTwoPi * double(jk) / double(m));
}

Complex log_L_P_char(const PrimeList& primes, double sigma, const Character& chi) {
  require(sigma > 0.5, ErrorKind::Domain, "log_L_P_char needs sigma > 1/2");
  Complex sum{0.0, 0.0};
  for (auto p : primes) {
    const Complex c = chi(p);
    const double r = std::abs(c) * std::pow(double(p), -sigma);
    if (r == 0.0) continue;
    sum += neg_log_one_minus(r, std::arg(c));
  }
  return sum;
}

Complex log_L_P_char(const PrimeList& primes, double sigma, const DirichletCharacterTable& table, std::int64_t j) {
  return log_L_P_char(primes, sigma, [&](std::int64_t n) { return table.value(j, n); });
}

}  // namespace mfunc
