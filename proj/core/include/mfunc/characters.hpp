#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "mfunc/primes.hpp"
#include "mfunc/types.hpp"

namespace mfunc {

/// Least primitive root modulo the prime q.
std::int64_t primitive_root(std::int64_t q);

/// All characters mod a prime q: χ_j(g^k) = e^{2πijk/(q−1)}, j = 0..q−2.
/// For prime q every χ_j with j ≠ 0 is primitive.
struct DirichletCharacterTable {
  std::int64_t q = 0;
  std::int64_t g = 0;
  std::vector<std::int64_t> dlog;  // dlog[a] = k with g^k ≡ a, a = 1..q−1; dlog[0] = −1

  std::int64_t count() const noexcept { return q - 1; }
  std::int64_t primitive_count() const noexcept { return q - 2; }
  bool is_primitive(std::int64_t j) const noexcept { return j % (q - 1) != 0; }
  /// χ_j(a); 0 when q | a.
  Complex value(std::int64_t j, std::int64_t a) const;
};

/// Requires q prime and q ≥ 3 (ErrorKind::Domain otherwise).
DirichletCharacterTable build_character_table(std::int64_t q);

/// A character as a function on the integers.
using Character = std::function<Complex(std::int64_t)>;

/// log L_P(σ, χ) = −Σ_{p∈P} Log(1 − χ(p) p^{−σ}); terms with χ(p) = 0 vanish. σ > 1/2.
Complex log_L_P_char(const PrimeList& primes, double sigma, const Character& chi);
Complex log_L_P_char(const PrimeList& primes, double sigma, const DirichletCharacterTable& table, std::int64_t j);

}  // namespace mfunc
