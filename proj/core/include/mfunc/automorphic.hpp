#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mfunc/averages.hpp"
#include "mfunc/char_function.hpp"
#include "mfunc/curve.hpp"
#include "mfunc/grid.hpp"
#include "mfunc/inversion.hpp"
#include "mfunc/modular.hpp"
#include "mfunc/primes.hpp"

namespace mfunc {

/// z_{f,p}(θ) = −Log(1 − α p^{−σ}e^{2πiθ}) − Log(1 − β p^{−σ}e^{2πiθ}).
class AutomorphicCurve {
 public:
  /// Requires σ > 1/2 and p ∤ level.
  AutomorphicCurve(const PrimitiveFormData& form, std::int64_t p, double sigma);

  Complex operator()(double theta) const noexcept;
  /// −Log(1 − λ x + x²), x = p^{−σ}e^{2πiθ}.
  Complex quadratic_form(double theta) const noexcept;
  /// d^k z/dθ^k for k = 1, 2, 3.
  Complex derivative(double theta, int order) const;
  /// Upper bound for max_θ |d^k z/dθ^k|, k = 0..3.
  double derivative_bound(int order) const;

  std::int64_t p() const noexcept { return p_; }
  double sigma() const noexcept { return sigma_; }
  double lambda() const noexcept { return lambda_; }
  double radius() const noexcept { return r_; }
  CurveMap map() const;

 private:
  std::int64_t p_;
  double sigma_, lambda_, r_;
  Complex alpha_, beta_;
};

Complex automorphic_curve_eval(const PrimitiveFormData& f, std::int64_t p, double sigma, double theta);

/// ∫₀¹ exp(i⟨w, z_{f,p}(θ)⟩) dθ.
QuadratureResult jw_type_integral(const PrimitiveFormData& f, std::int64_t p, double sigma, Complex w,
                                  const QuadratureOptions& opts = {});

/// p^{σ/2}|w|^{−1/2} + p^σ|w|^{−1}.
double jw_bound(std::int64_t p, double sigma, double w_abs);

/// |λ_f(p)| > √2 − ε, decided exactly from the integer coefficient when available.
bool in_pf(const PrimitiveFormData& f, std::int64_t p, double epsilon);

struct PartitionOptions {
  double epsilon = 0.1;
  std::size_t cells = std::size_t{1} << 14;
  bool enforce_precondition = true;  // p ∈ P_f(ε) required
};

/// θ-intervals where g(θ) = ⟨w, z_{f,p}(θ)⟩ obeys the first (I₁: |g′| bounded
/// below) or the second (I₂: |g″| bounded below) derivative test.
struct DerivativePartition {
  struct Interval {
    double lo, hi;
  };
  std::vector<Interval> first;
  std::vector<Interval> second;
  double first_lower_bound = std::numeric_limits<double>::infinity();   // certified min |g′| on I₁
  double second_lower_bound = std::numeric_limits<double>::infinity();  // certified min |g″| on I₂
  std::size_t cells = 0;

  /// I₁ ∪ I₂ = [0, 1) with no overlap.
  bool covers_circle() const;
};

/// Each of `cells` equal θ-cells goes to I₁ when |g′| ≥ |g″|/(2π) at its centre,
/// else to I₂; bounds are centre values minus half a cell times the analytic
/// bound on the next derivative, floored at 0. Throws ErrorKind::Precondition
/// for p ∉ P_f(ε) unless enforcement is off.
DerivativePartition derivative_partition(const PrimitiveFormData& f, std::int64_t p, double sigma, Complex w,
                                         const PartitionOptions& opts = {});

/// Sato–Tate mass of {|2cos θ| > t}: (2/π)(θ₀ − sin θ₀ cos θ₀), θ₀ = arccos(t/2).
double sato_tate_mass_above(double t);

struct PfCensusRow {
  std::int64_t p;
  double lambda;
  bool in_pf;
};

struct PfCensus {
  double epsilon = 0.0;
  std::int64_t X = 0;
  std::vector<PfCensusRow> rows;
  std::size_t members = 0;
  double density = 0.0;  // members / π(X)
};

/// Requires λ_f tabulated for every prime ≤ X (ErrorKind::Coverage otherwise).
PfCensus pf_epsilon_census(const PrimitiveFormData& f, double epsilon, std::int64_t X);

/// −Σ_{p∈P} Σ_{h=0}^{γ} Log(1 − α^{γ−h}β^h p^{−σ}). σ > 1/2, P coprime to the level.
Complex sym_power_log_partial(const PrimitiveFormData& f, int gamma, double sigma, const PrimeList& primes);

struct SymDiffRow {
  std::int64_t p;
  Complex difference;  // per-p log L(Sym^μ) − log L(Sym^{μ−2})
  Complex endpoint;    // −Log(1 − α^μ p^{−σ}) − Log(1 − β^μ p^{−σ})
  double deviation;
};

struct SymDiffReport {
  int mu = 0, nu = 0;
  double sigma = 0.0;
  std::vector<SymDiffRow> rows;
  double max_deviation = 0.0;
};

/// Requires μ ≥ 2, σ > 1/2.
SymDiffReport sym_diff_identity_check(const PrimitiveFormData& f, int mu, double sigma, const PrimeList& primes);

struct AutomorphicDensityOptions {
  double decay_target = 1e-8;  // required max |∏ factors| on the z-grid edge band
  int max_oversample = 4;
  QuadratureOptions quadrature;
  InversionOptions inversion;
};

/// Σ_{p∈P} 2(−log(1 − p^{−σ})) ≥ every |log L_P(f, σ+it)|.
double automorphic_support_radius(const PrimeList& primes, double sigma);

/// 1.2 × automorphic_support_radius, centred at 0.
GridSpec default_automorphic_grid(const PrimeList& primes, double sigma, int resolution = 512);

/// Density of log L_P(f, σ+it) by inverting ∏_{p∈P} jw_type_integral. The
/// z-grid is refined (up to max_oversample) until the edge band is below
/// decay_target; otherwise ErrorKind::Precondition asks for a larger P.
GridDensity automorphic_density(const PrimitiveFormData& f, double sigma, const PrimeList& primes,
                                const GridSpec& grid, const AutomorphicDensityOptions& opts = {});

struct AutomorphicLineOptions {
  double tail_tolerance = 0.05;  // bound on |log L_f − log L_{p≤X}|
};

struct AutomorphicLine {
  EmpiricalDistribution samples;
  std::int64_t prime_cutoff = 0;
  double tail_bound = 0.0;
};

/// Samples of log L_f(σ+it), t ∈ [−T, T], from the Euler sum over p ≤ X with X
/// the least cutoff whose tail bound 4 Σ_{p>X} p^{−σ} meets the tolerance.
/// Requires σ > 1 (ErrorKind::Precondition); ErrorKind::Precision when the
/// cutoff would exceed 10⁷; ErrorKind::Coverage when λ_f is not tabulated to X.
AutomorphicLine sample_log_L_f(const PrimitiveFormData& f, double sigma, double T, double step,
                               const AutomorphicLineOptions& opts = {});

/// Least X with 4 Σ_{p>X} p^{−σ} ≤ tolerance (upper-bounded), σ > 1.
std::int64_t automorphic_prime_cutoff(double sigma, double tolerance);

double empirical_W_automorphic(const PrimitiveFormData& f, double sigma, double T, double step,
                               const RectangleRegion& region, const AutomorphicLineOptions& opts = {});

/// Empirical constant on the shell R ≤ |w| ≤ 2R:
/// C(R) = sup |jw_type_integral(w)| / jw_bound(|w|).
struct LemmaConstantRow {
  double radius;       // shell start R
  double best_radius;  // |w| attaining the sup
  double sup_modulus;  // |jw_type_integral| there
  double best_angle;   // arg w there, in [0, π/2]
  double constant;
};

struct LemmaConstantReport {
  std::int64_t p = 0;
  double sigma = 0.0;
  double lambda = 0.0;
  std::vector<LemmaConstantRow> rows;
  double max_octave_ratio = 0.0;  // max over consecutive rows of max(C_{k+1}/C_k, C_k/C_{k+1})
  double spread = 0.0;            // max C / min C
};

/// |w| is swept across each shell at 8 samples per interference period 2π/diam(z),
/// over 129 directions in [0, π/2]; the best point is refined by golden-section
/// search in angle and then in radius.
LemmaConstantReport jw_lemma_constants(const PrimitiveFormData& f, std::int64_t p, double sigma,
                                       std::span<const double> radii);

}  // namespace mfunc
