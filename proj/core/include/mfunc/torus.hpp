#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "mfunc/curve.hpp"
#include "mfunc/grid.hpp"
#include "mfunc/primes.hpp"

namespace mfunc {

/// Samples per deterministic block of the torus Monte Carlo.
inline constexpr std::size_t kTorusBlock = std::size_t{1} << 15;

/// Pushforward of Haar measure on the torus under (θ_p) ↦ Σ_p curve_p(θ_p),
/// estimated from n_samples seeded draws and binned to the node grid (mass 1).
/// Draw k uses counters k·|curves| + i, so the result is independent of the
/// thread count. Throws ErrorKind::Coverage, with the lost fraction, if any
/// sample falls outside the grid.
GridDensity torus_histogram(std::span<const CurveMap> curves, std::size_t n_samples,
                            std::uint64_t seed, const GridSpec& grid);

/// The Euler-log map g_N for P at σ. Requires |P| ≥ 2 and σ > 1/2.
GridDensity torus_histogram(const PrimeList& primes, double sigma, std::size_t n_samples,
                            std::uint64_t seed, const GridSpec& grid);

}  // namespace mfunc
