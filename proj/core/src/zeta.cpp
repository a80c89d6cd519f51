#include "mfunc/zeta.hpp"

#include <array>
#include <cmath>
#include <optional>
#include <string>

#include "mfunc/error.hpp"

namespace mfunc {

namespace {

constexpr int kMaxBernoulli = 60;

// c_k = B_{2k}/(2k)! = (−1)^{k+1} 2 ζ(2k) / (2π)^{2k}
const std::array<double, kMaxBernoulli + 2>& bernoulli_ratios() {
  static const auto table = [] {
    std::array<double, kMaxBernoulli + 2> c{};
    for (int k = 1; k <= kMaxBernoulli + 1; ++k) {
      double zeta2k;
      if (k == 1) {
        zeta2k = kPi * kPi / 6.0;
      } else if (k == 2) {
        zeta2k = std::pow(kPi, 4) / 90.0;
      } else {
        zeta2k = 0.0;
        for (int n = 1000; n >= 1; --n) zeta2k += std::pow(static_cast<double>(n), -2.0 * k);
      }
      const double mag = 2.0 * zeta2k * std::exp(-2.0 * k * std::log(kTwoPi));
      c[k] = (k % 2 == 1) ? mag : -mag;
    }
    return c;
  }();
  return table;
}

Complex power_of(double base_log, Complex exponent) {  // e^{exponent · base_log}
  return std::exp(exponent * base_log);
}

// Remainder bound after m corrections: |s+2m+1|/(σ+2m+1) · |T_{m+1}|.
struct CorrectionScan {
  int best_m = 0;
  double best_bound = INFINITY;
};

CorrectionScan scan_corrections(Complex s, std::int64_t N, int max_m, double tolerance) {
  const auto& c = bernoulli_ratios();
  const double logN = std::log(static_cast<double>(N));
  const double invN2 = 1.0 / (static_cast<double>(N) * static_cast<double>(N));
  // |T_1| = |c_1| |s| N^{−σ−1}
  double term = std::abs(c[1]) * std::abs(s) * std::exp((-s.real() - 1.0) * logN);
  CorrectionScan scan;
  for (int m = 0; m <= max_m; ++m) {
    // term holds |T_{m+1}|
    const double bound = std::abs(s + double(2 * m + 1)) / (s.real() + 2 * m + 1) * term;
    if (m >= 1 && bound < scan.best_bound) {
      scan.best_bound = bound;
      scan.best_m = m;
      if (bound <= tolerance) break;
    }
    const int k = m + 1;  // advance to |T_{k+1}|
    term *= std::abs(s + double(2 * k - 1)) * std::abs(s + double(2 * k)) * invN2 *
            std::abs(c[k + 1] / c[k]);
  }
  return scan;
}

}  // namespace

EulerMaclaurinPlan plan_euler_maclaurin(Complex s, const ZetaOptions& options) {
  require(s.real() > 0.0, ErrorKind::Domain, "zeta evaluation needs sigma > 0");
  require(!(s.real() == 1.0 && s.imag() == 0.0), ErrorKind::Domain, "pole of zeta at s = 1");
  const int max_m = std::min(options.max_corrections, kMaxBernoulli - 1);
  auto N = std::max<std::int64_t>(10, static_cast<std::int64_t>(std::ceil(0.3 * std::abs(s))));
  while (true) {
    if (N > options.max_terms)
      throw Error(ErrorKind::Precision, "zeta tolerance " + std::to_string(options.tolerance) +
                                            " unreachable within max_terms at s = " +
                                            std::to_string(s.real()) + "+" +
                                            std::to_string(s.imag()) + "i");
    const auto scan = scan_corrections(s, N, max_m, options.tolerance);
    if (scan.best_bound <= options.tolerance) return {N, scan.best_m, scan.best_bound};
    N = static_cast<std::int64_t>(std::ceil(static_cast<double>(N) * 1.25));
  }
}

Complex euler_maclaurin_tail(Complex s, std::int64_t terms, int corrections) {
  const auto& c = bernoulli_ratios();
  const double N = static_cast<double>(terms);
  const double logN = std::log(N);
  const Complex Ns = power_of(logN, -s);  // N^{−s}
  Complex tail = N * Ns / (s - 1.0) + 0.5 * Ns;
  // T_k = c_k · (s)(s+1)…(s+2k−2) · N^{−s−2k+1}
  Complex poch = s;
  Complex Npow = Ns / N;
  for (int k = 1; k <= corrections; ++k) {
    tail += c[k] * poch * Npow;
    poch *= (s + double(2 * k - 1)) * (s + double(2 * k));
    Npow /= N * N;
  }
  return tail;
}

ZetaResult zeta_em(Complex s, const ZetaOptions& options) {
  const auto plan = plan_euler_maclaurin(s, options);
  Complex sum{0.0, 0.0};
  for (std::int64_t n = plan.terms - 1; n >= 1; --n)
    sum += power_of(std::log(static_cast<double>(n)), -s);
  sum += euler_maclaurin_tail(s, plan.terms, plan.corrections);
  return {sum, plan.error_bound, plan.terms, plan.corrections};
}

Complex zeta_eval(double sigma, double t, const ZetaOptions& options) {
  return zeta_em({sigma, t}, options).value;
}

namespace {

// Σ_{n<N} n^{−σ−it} on an arithmetic t-grid, with n^{−it} advanced by
// rotation and re-synchronised directly every `resync` steps.
class PhasorSum {
 public:
  PhasorSum(double sigma, double t0, double step, std::size_t resync)
      : sigma_(sigma), t0_(t0), step_(step), resync_(resync) {}

  Complex at(std::size_t k, std::int64_t N) {
    advance_to(k);
    const std::size_t want = static_cast<std::size_t>(N - 1);
    if (want > active_) {
      grow(want);
      const double t = t_of(k_);
      for (std::size_t i = active_; i < want; ++i) set_direct(i, t);
    }
    active_ = want;
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < active_; ++i) {
      re += amp_[i] * re_[i];
      im += amp_[i] * im_[i];
    }
    return {re, im};
  }

 private:
  double t_of(std::size_t k) const { return t0_ + static_cast<double>(k) * step_; }

  void grow(std::size_t want) {
    for (std::size_t i = amp_.size(); i < want; ++i) {
      const double lg = std::log(static_cast<double>(i + 1));
      lg_.push_back(lg);
      amp_.push_back(std::exp(-sigma_ * lg));
      rot_re_.push_back(std::cos(step_ * lg));
      rot_im_.push_back(-std::sin(step_ * lg));
      re_.push_back(1.0);
      im_.push_back(0.0);
    }
  }

  void set_direct(std::size_t i, double t) {
    re_[i] = std::cos(t * lg_[i]);
    im_[i] = -std::sin(t * lg_[i]);
  }

  void advance_to(std::size_t k) {
    if (!started_) {
      started_ = true;
      k_ = k;
      return;
    }
    while (k_ < k) {
      ++k_;
      if (k_ % resync_ == 0) {
        const double t = t_of(k_);
        for (std::size_t i = 0; i < active_; ++i) set_direct(i, t);
      } else {
        for (std::size_t i = 0; i < active_; ++i) {
          const double a = re_[i], b = im_[i];
          re_[i] = a * rot_re_[i] - b * rot_im_[i];
          im_[i] = a * rot_im_[i] + b * rot_re_[i];
        }
      }
    }
  }

  double sigma_, t0_, step_;
  std::size_t resync_;
  bool started_ = false;
  std::size_t k_ = 0, active_ = 0;
  std::vector<double> lg_, amp_, rot_re_, rot_im_, re_, im_;
};

constexpr double kNearZero = 1e-7;

// Phase increment arg(b/a) between two ζ samples, bisecting until each piece moves
// less than the allowed increment. Empty result: tracking failed.
std::optional<double> tracked_increment(Complex sa, Complex za, Complex sb, Complex zb,
                                        const LineOptions& options, const ZetaOptions& zopt,
                                        int depth) {
  const double inc = std::arg(zb / za);
  if (std::abs(inc) <= options.max_phase_increment) return inc;
  if (depth >= options.max_refinements) return std::nullopt;
  const Complex sm = 0.5 * (sa + sb);
  const Complex zm = zeta_em(sm, zopt).value;
  if (std::abs(zm) < kNearZero) return std::nullopt;
  const auto left = tracked_increment(sa, za, sm, zm, options, zopt, depth + 1);
  if (!left) return std::nullopt;
  const auto right = tracked_increment(sm, zm, sb, zb, options, zopt, depth + 1);
  if (!right) return std::nullopt;
  return *left + *right;
}

constexpr double kAnchorSigma = 3.0;
constexpr double kAnchorStep = 0.05;

// Continues log ζ along σ' ∈ [σ, 3] at fixed t, starting from the principal log at σ' = 3.
std::optional<Complex> anchored_log(double sigma, double t, Complex z_target,
                                    const LineOptions& options, const ZetaOptions& zopt) {
  if (sigma >= kAnchorSigma) return std::log(z_target);
  Complex s_prev{kAnchorSigma, t};
  Complex z_prev = zeta_em(s_prev, zopt).value;
  double arg_acc = std::arg(z_prev);
  const int steps = static_cast<int>(std::ceil((kAnchorSigma - sigma) / kAnchorStep));
  for (int i = 1; i <= steps; ++i) {
    const double sig = i == steps ? sigma : kAnchorSigma - i * kAnchorStep;
    const Complex s{sig, t};
    const Complex z = i == steps ? z_target : zeta_em(s, zopt).value;
    if (std::abs(z) < kNearZero) return std::nullopt;
    const auto inc = tracked_increment(s_prev, z_prev, s, z, options, zopt, 0);
    if (!inc) return std::nullopt;
    arg_acc += *inc;
    s_prev = s;
    z_prev = z;
  }
  return Complex{std::log(std::abs(z_target)), arg_acc};
}

void check_line_sigma(double sigma, const LineOptions& options) {
  if (options.experimental) {
    require(sigma > 0.5, ErrorKind::Domain, "log_zeta_line experimental mode needs sigma > 1/2");
  } else {
    require(sigma > 1.0, ErrorKind::Precondition,
            "log_zeta_line default mode needs sigma > 1 (use experimental mode for 1/2 < sigma <= 1)");
  }
}

}  // namespace

Complex log_zeta_point(double sigma, double t, const LineOptions& options) {
  check_line_sigma(sigma, options);
  ZetaOptions zopt;
  zopt.tolerance = options.tolerance;
  const Complex z = zeta_em({sigma, t}, zopt).value;
  const auto value = anchored_log(sigma, t, z, options, zopt);
  require(value.has_value(), ErrorKind::Precision,
          "branch tracking failed (suspected nearby zero) at t = " + std::to_string(t));
  return *value;
}

LogZetaLine log_zeta_line(double sigma, double t_min, double t_max, double step,
                          const LineOptions& options) {
  check_line_sigma(sigma, options);
  require(step > 0.0 && t_max >= t_min, ErrorKind::Domain, "log_zeta_line needs step > 0 and t_max >= t_min");
  ZetaOptions zopt;
  zopt.tolerance = options.tolerance;

  const auto n = static_cast<std::size_t>(std::floor((t_max - t_min) / step + 0.5)) + 1;
  LogZetaLine line;
  line.sigma = sigma;
  line.t.resize(n);
  line.values.resize(n);
  line.flagged.assign(n, 0);

  PhasorSum phasors(sigma, t_min, step, std::max<std::size_t>(1, options.resync_interval));
  bool need_anchor = true;
  Complex s_prev, z_prev, log_prev;
  for (std::size_t k = 0; k < n; ++k) {
    const double t = t_min + static_cast<double>(k) * step;
    const Complex s{sigma, t};
    const auto plan = plan_euler_maclaurin(s, zopt);
    const Complex z =
        phasors.at(k, plan.terms) + euler_maclaurin_tail(s, plan.terms, plan.corrections);
    line.t[k] = t;

    std::optional<Complex> value;
    if (std::abs(z) >= kNearZero) {
      if (need_anchor) {
        value = anchored_log(sigma, t, z, options, zopt);
      } else if (auto inc = tracked_increment(s_prev, z_prev, s, z, options, zopt, 0)) {
        value = Complex{std::log(std::abs(z)), log_prev.imag() + *inc};
      }
    }
    if (value) {
      line.values[k] = *value;
      log_prev = *value;
      need_anchor = false;
    } else {
      line.values[k] = std::abs(z) > 0.0 ? std::log(z) : Complex{};
      line.flagged[k] = 1;
      ++line.flagged_count;
      need_anchor = true;
    }
    s_prev = s;
    z_prev = z;
  }
  return line;
}

}  // namespace mfunc
