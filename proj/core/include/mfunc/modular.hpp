#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mfunc/primes.hpp"
#include "mfunc/types.hpp"

namespace mfunc {

using Int128 = __int128;

std::string to_string(Int128 value);

/// τ(n) for 0 ≤ n ≤ N (index 0 holds 0), the coefficients of
/// q∏_{n≥1}(1−q^n)^{24}. Exact; throws ErrorKind::Range if a coefficient
/// would overflow 128 bits.
std::vector<Int128> ramanujan_tau_table(std::int64_t N);

/// Unit-modulus roots of 1 − λx + x²: α + β = λ, αβ = 1, β = ᾱ.
struct SatakePair {
  Complex alpha;
  Complex beta;
};

/// Throws ErrorKind::Domain when |λ| > 2 (Ramanujan bound violated).
SatakePair satake_pair(double lambda);

/// A primitive form through its normalised Hecke eigenvalues λ_f(p).
struct PrimitiveFormData {
  std::string name;
  int weight = 0;
  std::int64_t level = 1;
  std::map<std::int64_t, double> eigenvalues;      // p → λ_f(p)
  std::map<std::int64_t, SatakePair> satake;       // p ∤ level
  std::map<std::int64_t, Int128> integer_coeffs;   // p → a_f(p) when known exactly

  /// Largest X such that λ_f(p) is tabulated for every prime p ≤ X.
  std::int64_t tabulated_limit() const;
  double lambda(std::int64_t p) const;
  const SatakePair& satake_at(std::int64_t p) const;
  bool divides_level(std::int64_t p) const noexcept { return level % p == 0; }
};

/// Ramanujan's Δ (level 1, weight 12) with λ(p) = τ(p)/p^{11/2} for all p ≤ max_prime.
PrimitiveFormData delta_form(std::int64_t max_prime);

/// Reads `p<TAB>lambda` lines ('#' comments allowed). Throws ErrorKind::Data on
/// malformed lines, non-primes, duplicate primes or |λ| > 2 away from the level.
PrimitiveFormData load_eigenvalue_file(const std::filesystem::path& path, int weight,
                                       std::int64_t level);

}  // namespace mfunc
