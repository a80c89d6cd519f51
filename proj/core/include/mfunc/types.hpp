#pragma once

#include <complex>
#include <numbers>

namespace mfunc {

/// Points s = σ+it, w = u+iv, z = a+ib, and values of log L all live here.
using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// ⟨z, w⟩ = Re(z̄w) = Re z Re w + Im z Im w, the real pairing behind ψ_z(w) = exp(i⟨z, w⟩).
inline double pairing(Complex z, Complex w) noexcept {
  return z.real() * w.real() + z.imag() * w.imag();
}

}  // namespace mfunc
