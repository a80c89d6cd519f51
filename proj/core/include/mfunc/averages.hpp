#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mfunc/curve.hpp"
#include "mfunc/grid.hpp"
#include "mfunc/primes.hpp"
#include "mfunc/test_function.hpp"
#include "mfunc/zeta.hpp"

namespace mfunc {

/// Weighted point samples of a value distribution. `weights` are relative
/// (normalised at use) and, when empty, uniform.
struct EmpiricalDistribution {
  std::vector<Complex> samples;
  std::vector<double> weights;
  std::size_t excluded = 0;  // samples dropped before construction (e.g. flagged by branch tracking)
  std::optional<GridDensity> summary;

  /// Trapezoid weights over an equally spaced t-grid (½ at both ends);
  /// flagged samples are dropped.
  static EmpiricalDistribution from_line(std::span<const Complex> values, std::span<const std::uint8_t> flagged = {});
  static EmpiricalDistribution from_line(const LogZetaLine& line);

  double total_weight() const noexcept;
  void validate() const;
};

/// Weighted fraction of samples in the half-open rectangle. Requires samples.
double empirical_W(const EmpiricalDistribution& dist, const RectangleRegion& region);

/// log ζ(σ+it) on t ∈ [−T, T] with the given step, as trapezoid-weighted samples.
EmpiricalDistribution sample_log_zeta(double sigma, double T, double step, const LineOptions& options = {});

/// (1/2T) ∫_{−T}^{T} Φ(log L_P(σ+iτ)) dτ by the trapezoid rule, for several Φ
/// in one pass over τ. σ > 1/2, T > 0, step > 0.
std::vector<Complex> chi_tau_average(const PrimeList& primes, double sigma, std::span<const TestFunction> phis,
                                     double T, double step);
Complex chi_tau_average(const PrimeList& primes, double sigma, const TestFunction& phi, double T, double step);

struct ModulusAverage {
  Complex value;
  std::int64_t q = 0;
  std::size_t characters = 0;
  std::optional<std::string> warning;
};

/// (1/(q−2)) Σ_{χ primitive mod q} Φ(log L_P(σ, χ)). q prime; q = 2 is a
/// degenerate modulus (ErrorKind::Domain). A warning is attached when q ∈ P.
ModulusAverage modulus_average(std::int64_t q, const PrimeList& primes, double sigma, const TestFunction& phi);

/// Mean of modulus_average over the prime moduli 3 ≤ q ≤ m. Requires m ≥ 3.
Complex ihara_outer_average(std::int64_t m, const PrimeList& primes, double sigma, const TestFunction& phi);

struct TorusIntegralOptions {
  std::size_t points = 65537;          // lattice size (prime) or Monte Carlo sample count
  std::size_t max_lattice_dimension = 8;
  std::uint64_t seed = 0;              // used only beyond max_lattice_dimension
};

struct TorusIntegral {
  Complex value;
  std::string method;  // "korobov-lattice" or "monte-carlo"
  std::size_t points = 0;
};

/// ∫_{T^N} Φ(Σ_i curve_i(θ_i)) dθ.
TorusIntegral torus_integral(std::span<const CurveMap> curves, const TestFunction& phi,
                             const TorusIntegralOptions& opts = {});
/// The same for the Euler-log map of P at σ.
TorusIntegral torus_integral(const PrimeList& primes, double sigma, const TestFunction& phi,
                             const TorusIntegralOptions& opts = {});

}  // namespace mfunc
