#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mfunc/types.hpp"

namespace mfunc {

struct ZetaOptions {
  double tolerance = 1e-10;           // absolute error target
  int max_corrections = 30;           // Euler–Maclaurin Bernoulli terms
  std::int64_t max_terms = 20'000'000;
};

/// A ζ value together with its rigorous Euler–Maclaurin remainder bound.
struct ZetaResult {
  Complex value;
  double error_bound = 0.0;
  std::int64_t terms = 0;   // N: the main sum runs over n < N
  int corrections = 0;      // m
};

/// Cutoff N and correction count m meeting the tolerance at s, with the bound.
struct EulerMaclaurinPlan {
  std::int64_t terms = 0;
  int corrections = 0;
  double error_bound = 0.0;
};
EulerMaclaurinPlan plan_euler_maclaurin(Complex s, const ZetaOptions& options = {});

/// ζ(s) = Σ_{n<N} n^{−s} + tail(s, N, m); `main_sum` supplies the first part.
Complex euler_maclaurin_tail(Complex s, std::int64_t terms, int corrections);

ZetaResult zeta_em(Complex s, const ZetaOptions& options = {});

/// ζ(σ+it) by Euler–Maclaurin summation. Throws Domain for σ ≤ 0 or s = 1,
/// Precision when the tolerance needs more than max_terms terms.
Complex zeta_eval(double sigma, double t, const ZetaOptions& options = {});

struct LineOptions {
  /// Allows 1/2 < σ ≤ 1, where zeros of ζ can break branch tracking.
  bool experimental = false;
  double tolerance = 1e-10;
  double max_phase_increment = kPi / 2;
  int max_refinements = 16;
  std::size_t resync_interval = 256;
};

/// log ζ(σ+it) on t_k = t_min + k·step, branch-continuous in t. The branch is
/// anchored by continuation along the horizontal segment from σ = 3, where
/// |ζ − 1| < 1 and the principal logarithm agrees with the Euler sum.
struct LogZetaLine {
  double sigma = 0.0;
  std::vector<double> t;
  std::vector<Complex> values;
  std::vector<std::uint8_t> flagged;  // 1 = branch tracking failed, excluded from statistics
  std::size_t flagged_count = 0;
};

LogZetaLine log_zeta_line(double sigma, double t_min, double t_max, double step,
                          const LineOptions& options = {});

/// log ζ(σ+it) at a single point, anchored by horizontal continuation from σ = 3.
Complex log_zeta_point(double sigma, double t, const LineOptions& options = {});

}  // namespace mfunc
