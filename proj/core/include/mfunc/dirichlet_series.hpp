#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mfunc/primes.hpp"
#include "mfunc/types.hpp"

namespace mfunc {

/// λ_z(n) for n ≤ N: the Dirichlet coefficients of ζ(s)^{iz/2}, so
/// λ_z(p^k) = (iz/2)(iz/2 + 1)···(iz/2 + k − 1)/k!, extended multiplicatively.
struct LambdaTable {
  Complex z;
  std::int64_t N = 0;
  std::vector<Complex> coeffs;  // coeffs[n], n = 1..N; coeffs[0] unused

  Complex operator()(std::int64_t n) const { return coeffs.at(std::size_t(n)); }
};

/// Requires N ≥ 1.
LambdaTable lambda_coefficients(Complex z, std::int64_t N);

/// λ_z(p^k) for k = 0..kmax (independent of p).
std::vector<Complex> lambda_prime_power(Complex z, int kmax);

struct SeriesOptions {
  double tail_tolerance = 1e-6;  // a warning is attached when the tail bound exceeds this
};

/// A partial Dirichlet sum with a rigorous tail bound (Rankin's trick).
struct SeriesResult {
  Complex value;
  double tail_bound = 0.0;
  std::size_t terms = 0;
  std::optional<std::string> warning;
};

/// 𝓜̃_σ(z) ≈ Σ_{n≤N} λ_z(n) λ_{z̄}(n) n^{−2σ}; with `smooth` set, only n whose
/// prime factors all lie in it. Requires σ > 1/2, N ≥ 1.
SeriesResult mtilde_dirichlet(double sigma, Complex z, std::int64_t N,
                              const std::optional<PrimeList>& smooth = std::nullopt,
                              const SeriesOptions& opts = {});

/// 𝓜̃_s(z₁, z₂) ≈ Σ_{n≤N} λ_{z₁}(n) λ_{z₂}(n) n^{−2s}. Requires Re s > 1/2.
SeriesResult generalized_mtilde(Complex s, Complex z1, Complex z2, std::int64_t N,
                                const SeriesOptions& opts = {});

}  // namespace mfunc
