#pragma once

#include <string>
#include <string_view>

#include "mfunc/char_function.hpp"
#include "mfunc/grid.hpp"
#include "mfunc/inversion.hpp"
#include "mfunc/primes.hpp"

namespace mfunc {

enum class DensityMethod { FourierInversion, CurveConvolution };

std::string_view to_string(DensityMethod method) noexcept;
/// Accepts "fourier-inversion"/"fourier" and "curve-convolution"/"curve".
DensityMethod parse_density_method(std::string_view name);

struct DensityOptions {
  int max_oversample = 4;        // z-grid refinement cap for the Fourier route
  double decay_target = 1e-8;    // (1+Z)^{−|P|/2} below this fixes the wanted z half-width
  QuadratureOptions quadrature;
  InversionOptions inversion;
};

/// Grid of the given resolution centred at 0 with half-width 1.2 × Σ −log(1 − p^{−σ}).
GridSpec default_density_grid(const PrimeList& primes, double sigma, int resolution = 512);

/// Smallest power-of-two z-grid oversampling (≤ cap) whose half-width reaches
/// the decay-law radius (decay_target)^{−2/|P|} − 1.
int decay_oversample(std::size_t n_primes, const GridSpec& grid, double decay_target, int cap);

/// 𝓜_{σ,P} on `grid`. Fourier inversion needs |P| ≥ 3 (ErrorKind::Method
/// otherwise); curve convolution works for any nonempty P. σ > 1/2.
GridDensity m_sigma_P(const PrimeList& primes, double sigma, const GridSpec& grid, DensityMethod method,
                      const DensityOptions& opts = {});

GridDensity m_sigma_P(const PrimeList& primes, double sigma, DensityMethod method = DensityMethod::FourierInversion);

}  // namespace mfunc
