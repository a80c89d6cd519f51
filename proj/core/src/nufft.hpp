#pragma once

#include <complex>
#include <span>
#include <vector>

namespace mfunc::detail {

/// Type-1 2D NUFFT with Gaussian gridding:
///   F(k, l) = Σ_j c_j exp(i(k x_j + l y_j)),  k, l ∈ [−M/2, M/2),
/// returned as out[(l + M/2)·M + (k + M/2)]. Points are taken mod 2π.
/// Accuracy is about 1e−13 relative to Σ|c_j|.
std::vector<std::complex<double>> nufft2d_type1(std::span<const double> x, std::span<const double> y,
                                                std::span<const std::complex<double>> c, int modes);

}  // namespace mfunc::detail
