#pragma once

#include <string>

#include "mfunc/grid.hpp"
#include "mfunc/types.hpp"

namespace mfunc {

/// Bounded test function Φ on the w-plane.
///   rectangle       1_R(w)
///   gaussian        exp(−|w − c|² / (2 width²))
///   builtin         "one" (≡ 1), "re" (Re w), "im" (Im w), "cos-re" (cos Re w)
///   fourier-kernel  ψ_z(w) = exp(i⟨z, w⟩)
class TestFunction {
 public:
  enum class Kind { Rectangle, Gaussian, Builtin, FourierKernel };

  static TestFunction rectangle(const RectangleRegion& region);
  static TestFunction gaussian(Complex center, double width);
  static TestFunction builtin(const std::string& name);
  static TestFunction fourier_kernel(Complex z);
  static TestFunction one() { return builtin("one"); }

  Complex operator()(Complex w) const noexcept;

  Kind kind() const noexcept { return kind_; }
  bool is_one() const noexcept { return kind_ == Kind::Builtin && builtin_ == Builtin::One; }
  /// Human-readable form, e.g. "gaussian(center=0+0i,width=0.5)".
  std::string describe() const;

 private:
  enum class Builtin { One, Re, Im, CosRe };

  Kind kind_ = Kind::Builtin;
  RectangleRegion rect_{};
  Complex center_{};
  double width_ = 1.0;
  Builtin builtin_ = Builtin::One;
  Complex z_{};
};

}  // namespace mfunc
