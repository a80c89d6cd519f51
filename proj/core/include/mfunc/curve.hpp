#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "mfunc/types.hpp"

namespace mfunc {

/// The single-prime measure: θ ↦ −Log(1 − p^{−σ} e^{2πiθ}) pushed forward from
/// uniform θ ∈ [0,1). points[k] = w(k/n).
struct CurveMeasure {
  std::int64_t p = 0;
  double sigma = 0.0;
  std::vector<Complex> points;

  std::size_t size() const noexcept { return points.size(); }
  double theta(std::size_t k) const noexcept { return double(k) / double(points.size()); }
  /// Trapezoid mean of w over θ.
  Complex mean() const noexcept;
  double max_modulus() const noexcept;
};

/// A closed curve θ ↦ w(θ) on [0,1); the generic input of the torus and
/// characteristic-function machinery (prime curves, automorphic curves).
using CurveMap = std::function<Complex(double theta)>;

/// θ ↦ −Log(1 − p^{−σ} e^{2πiθ}). Requires σ > 0.
CurveMap prime_curve_map(std::int64_t p, double sigma);

/// Requires σ > 1/2 and n_samples ≥ 256 (ErrorKind::Domain otherwise).
CurveMeasure prime_curve_measure(std::int64_t p, double sigma, std::size_t n_samples);

}  // namespace mfunc
