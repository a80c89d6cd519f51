#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mfunc/curve.hpp"
#include "mfunc/grid.hpp"
#include "mfunc/primes.hpp"
#include "mfunc/types.hpp"

namespace mfunc {

/// Periodic trapezoid rule with node doubling.
struct QuadratureOptions {
  double tolerance = 1e-12;          // stop when successive estimates differ by less
  std::size_t initial_nodes = 32;
  std::size_t max_nodes = std::size_t{1} << 22;
};

struct QuadratureResult {
  Complex value;
  std::size_t nodes = 0;
};

/// ∫₀¹ exp(i⟨z, curve(θ)⟩) dθ. Throws ErrorKind::Precision when max_nodes is exhausted.
QuadratureResult curve_char_factor(const CurveMap& curve, Complex z, const QuadratureOptions& opts = {});

/// 𝓜̃_{σ,{p}}(z) = ∫₀¹ ψ_z(−Log(1 − p^{−σ}e^{2πiθ})) dθ. Requires σ > 0.
Complex one_prime_char_factor(std::int64_t p, double sigma, Complex z, const QuadratureOptions& opts = {});

/// 𝓜̃_{σ,P}(z) = ∏_{p∈P} one_prime_char_factor(p, σ, z). Requires σ > 1/2.
Complex char_function_P(const PrimeList& primes, double sigma, Complex z, const QuadratureOptions& opts = {});

/// z-plane node grid centred at 0: node (k, l) = ((k − N/2)Δ, (l − N/2)Δ), Δ = 2Z/N.
struct CharGridSpec {
  double half_width = 1.0;
  int resolution = 512;

  double spacing() const noexcept { return 2.0 * half_width / resolution; }
  double node_a(int k) const noexcept { return (k - resolution / 2) * spacing(); }
  Complex node(int k, int l) const noexcept { return {node_a(k), node_a(l)}; }
  std::size_t size() const noexcept { return std::size_t(resolution) * std::size_t(resolution); }
  void validate() const;
};

/// Decay summary of a sampled characteristic function.
struct DecayInfo {
  double tail_tolerance = 1e-8;
  double fitted_exponent = 0.0;          // slope of log max|𝓜̃| against log(1+|z|)
  double max_radius_above_tolerance = 0.0;
  double edge_max = 0.0;                 // max |𝓜̃| on the outer 1/32 band of the grid
};

struct CharFunctionGrid {
  CharGridSpec spec;
  std::vector<Complex> values;  // values[l * N + k]
  DecayInfo decay;
  std::string source;

  CharFunctionGrid() = default;
  explicit CharFunctionGrid(const CharGridSpec& s) : spec(s), values(s.size(), Complex{1.0, 0.0}) {}

  Complex& at(int k, int l) { return values[std::size_t(l) * spec.resolution + k]; }
  Complex at(int k, int l) const { return values[std::size_t(l) * spec.resolution + k]; }
  double max_modulus() const noexcept;
};

/// Fills `decay` from the current values.
void update_decay_info(CharFunctionGrid& grid, double tail_tolerance = 1e-8);

/// The z-grid dual to a w-grid: Δz = π/W and N_z = oversample·N, so that an
/// inverse DFT lands on (a refinement of) the w nodes.
CharGridSpec dual_char_grid(const GridSpec& w_grid, int oversample = 1);

/// ∏ over the curves of ∫₀¹ ψ_z(curve(θ)) dθ at every node, by a type-1 NUFFT
/// of each curve's trapezoid nodes. The node count per curve is fixed by the
/// doubling rule at the largest |z| of the grid.
CharFunctionGrid curve_product_grid(std::span<const CurveMap> curves, const CharGridSpec& spec,
                                    const QuadratureOptions& opts = {});

/// 𝓜̃_{σ,P} on a grid. Requires σ > 1/2.
CharFunctionGrid char_function_grid(const PrimeList& primes, double sigma, const CharGridSpec& spec,
                                    const QuadratureOptions& opts = {});

/// Node-by-node tabulation of an arbitrary characteristic function.
CharFunctionGrid tabulate_char_function(const std::function<Complex(Complex)>& f, const CharGridSpec& spec);

/// Per-prime Jessen–Wintner ratios and the product decay fit.
struct JwDecayRow {
  std::int64_t p;
  double radius;
  double max_modulus;  // max over directions of |factor|
  double ratio;        // max_modulus · p^{−σ/2} · radius^{1/2}
};

struct JwDecayReport {
  double sigma = 0.0;
  std::vector<double> radii;
  int directions = 0;
  std::vector<JwDecayRow> rows;
  std::vector<double> product_envelope;  // max over directions of |∏ factors| per radius
  double max_ratio = 0.0;                // empirical JW constant
  double max_octave_change = 0.0;        // largest relative change of the per-octave max ratio
  double fitted_exponent = 0.0;          // slope of log envelope against log(1 + radius)
};

/// Requires positive, increasing radii and directions ≥ 1. Direction d is
/// exp(2πi(d + ½)/directions).
JwDecayReport jw_decay_report(const PrimeList& primes, double sigma, std::span<const double> radii,
                              int directions);

/// Least-squares slope of log y against log x.
double log_log_slope(std::span<const double> x, std::span<const double> y);

}  // namespace mfunc
