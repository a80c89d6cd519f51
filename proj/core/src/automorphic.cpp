#include "mfunc/automorphic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "mfunc/error.hpp"
#include "mfunc/euler.hpp"
#include "mfunc/mdensity.hpp"
#include "mfunc/parallel.hpp"

namespace mfunc {

AutomorphicCurve::AutomorphicCurve(const PrimitiveFormData& form, std::int64_t p, double sigma)
    : p_(p), sigma_(sigma) {
  require(sigma > 0.5, ErrorKind::Domain, "automorphic curve needs sigma > 1/2");
  require(!form.divides_level(p), ErrorKind::Precondition,
          "p = " + std::to_string(p) + " divides the level of " + form.name);
  lambda_ = form.lambda(p);
  const auto& sp = form.satake_at(p);
  alpha_ = sp.alpha;
  beta_ = sp.beta;
  r_ = std::pow(double(p), -sigma);
}

Complex AutomorphicCurve::operator()(double theta) const noexcept {
  const double phi = kTwoPi * theta;
  return neg_log_one_minus(r_, std::arg(alpha_) + phi) + neg_log_one_minus(r_, std::arg(beta_) + phi);
}

Complex AutomorphicCurve::quadratic_form(double theta) const noexcept {
  const Complex x = std::polar(r_, kTwoPi * theta);
  return -std::log(1.0 - lambda_ * x + x * x);
}

Complex AutomorphicCurve::derivative(double theta, int order) const {
  const Complex x = std::polar(r_, kTwoPi * theta);
  const Complex i{0.0, 1.0};
  Complex s{0.0, 0.0};
  for (const Complex c : {alpha_, beta_}) {
    const Complex cx = c * x, d = 1.0 - cx;
    switch (order) {
      case 1: s += cx / d; break;
      case 2: s += cx / (d * d); break;
      case 3: s += cx * (1.0 + cx) / (d * d * d); break;
      default: throw Error(ErrorKind::Domain, "derivative order must be 1, 2 or 3");
    }
  }
  switch (order) {
    case 1: return 2.0 * kPi * i * s;
    case 2: return -4.0 * kPi * kPi * s;
    default: return -8.0 * kPi * kPi * kPi * i * s;
  }
}

double AutomorphicCurve::derivative_bound(int order) const {
  const double r = r_;
  switch (order) {
    case 0: return -2.0 * std::log1p(-r);
    case 1: return 2.0 * kPi * 2.0 * r / (1.0 - r);
    case 2: return 4.0 * kPi * kPi * 2.0 * r / ((1.0 - r) * (1.0 - r));
    case 3: return 8.0 * kPi * kPi * kPi * 2.0 * r * (1.0 + r) / ((1.0 - r) * (1.0 - r) * (1.0 - r));
    default: throw Error(ErrorKind::Domain, "derivative order must be 0..3");
  }
}

CurveMap AutomorphicCurve::map() const {
  return [c = *this](double theta) { return c(theta); };
}

Complex automorphic_curve_eval(const PrimitiveFormData& f, std::int64_t p, double sigma, double theta) {
  return AutomorphicCurve(f, p, sigma)(theta);
}

QuadratureResult jw_type_integral(const PrimitiveFormData& f, std::int64_t p, double sigma, Complex w,
                                  const QuadratureOptions& opts) {
  return curve_char_factor(AutomorphicCurve(f, p, sigma).map(), w, opts);
}

double jw_bound(std::int64_t p, double sigma, double w_abs) {
  return std::pow(double(p), sigma / 2.0) / std::sqrt(w_abs) + std::pow(double(p), sigma) / w_abs;
}

bool in_pf(const PrimitiveFormData& f, std::int64_t p, double epsilon) {
  namespace mp = boost::multiprecision;
  const double lam = f.lambda(p);
  const auto it = f.integer_coeffs.find(p);
  if (it == f.integer_coeffs.end()) return std::abs(lam) > std::sqrt(2.0) - epsilon;

  // λ = a / p^{(k−1)/2}, so |λ| > t ⇔ a² > t² p^{k−1} for t ≥ 0.
  const mp::cpp_int a(to_string(it->second));
  const mp::cpp_int a2 = a * a;
  const mp::cpp_int pk = mp::pow(mp::cpp_int(p), f.weight - 1);
  if (epsilon == 0.0) return a2 > 2 * pk;
  using Float = mp::cpp_bin_float_50;
  const Float t = mp::sqrt(Float(2)) - Float(epsilon);
  if (t < 0) return true;
  if (t == 0) return a != 0;
  return Float(a2) > t * t * Float(pk);
}

namespace {

void append_interval(std::vector<DerivativePartition::Interval>& v, double lo, double hi) {
  if (!v.empty() && v.back().hi == lo)
    v.back().hi = hi;
  else
    v.push_back({lo, hi});
}

}  // namespace

bool DerivativePartition::covers_circle() const {
  std::vector<Interval> all(first);
  all.insert(all.end(), second.begin(), second.end());
  std::sort(all.begin(), all.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  double at = 0.0;
  for (const auto& iv : all) {
    if (iv.lo != at || !(iv.hi > iv.lo)) return false;
    at = iv.hi;
  }
  return at == 1.0;
}

DerivativePartition derivative_partition(const PrimitiveFormData& f, std::int64_t p, double sigma, Complex w,
                                         const PartitionOptions& opts) {
  require(opts.cells >= 2, ErrorKind::Domain, "derivative_partition needs at least 2 cells");
  if (opts.enforce_precondition)
    require(in_pf(f, p, opts.epsilon), ErrorKind::Precondition,
            "p = " + std::to_string(p) + " is not in P_f(" + std::to_string(opts.epsilon) +
                "): |lambda_f(p)| = " + std::to_string(std::abs(f.lambda(p))));
  const AutomorphicCurve curve(f, p, sigma);
  const std::size_t n = opts.cells;
  const double width = 1.0 / double(n);
  const double wabs = std::abs(w);
  const double pad1 = 0.5 * width * wabs * curve.derivative_bound(2);
  const double pad2 = 0.5 * width * wabs * curve.derivative_bound(3);

  DerivativePartition out;
  out.cells = n;
  for (std::size_t k = 0; k < n; ++k) {
    const double theta = (double(k) + 0.5) * width;
    const double g1 = std::abs(pairing(w, curve.derivative(theta, 1)));
    const double g2 = std::abs(pairing(w, curve.derivative(theta, 2)));
    const double lo = double(k) * width, hi = (k + 1 == n) ? 1.0 : double(k + 1) * width;
    if (g1 >= g2 / kTwoPi) {
      append_interval(out.first, lo, hi);
      out.first_lower_bound = std::min(out.first_lower_bound, std::max(0.0, g1 - pad1));
    } else {
      append_interval(out.second, lo, hi);
      out.second_lower_bound = std::min(out.second_lower_bound, std::max(0.0, g2 - pad2));
    }
  }
  return out;
}

double sato_tate_mass_above(double t) {
  if (t <= 0.0) return 1.0;
  if (t >= 2.0) return 0.0;
  const double th = std::acos(0.5 * t);
  return (2.0 / kPi) * (th - std::sin(th) * std::cos(th));
}

PfCensus pf_epsilon_census(const PrimitiveFormData& f, double epsilon, std::int64_t X) {
  require(X >= 2, ErrorKind::Domain, "pf_epsilon_census needs X >= 2");
  require(f.tabulated_limit() >= X, ErrorKind::Coverage,
          "eigenvalues of " + f.name + " are tabulated only up to " + std::to_string(f.tabulated_limit()) +
              ", census needs " + std::to_string(X));
  PfCensus c;
  c.epsilon = epsilon;
  c.X = X;
  const auto primes = primes_up_to(X);
  c.rows.resize(primes.size());
  parallel_blocks(primes.size(), [&](std::size_t i) {
    const auto p = primes[i];
    c.rows[i] = {p, f.lambda(p), in_pf(f, p, epsilon)};
  });
  for (const auto& r : c.rows) c.members += r.in_pf ? 1 : 0;
  c.density = double(c.members) / double(c.rows.size());
  return c;
}

namespace {

void require_coprime(const PrimitiveFormData& f, const PrimeList& primes) {
  for (auto p : primes)
    require(!f.divides_level(p), ErrorKind::Precondition,
            "p = " + std::to_string(p) + " divides the level of " + f.name);
}

// −Σ_{h=0}^{γ} Log(1 − e^{i(γ−2h)φ} x) with α = e^{iφ}.
Complex sym_local(double phi, int gamma, double x) {
  Complex s{0.0, 0.0};
  for (int h = 0; h <= gamma; ++h) s += neg_log_one_minus(x, double(gamma - 2 * h) * phi);
  return s;
}

}  // namespace

Complex sym_power_log_partial(const PrimitiveFormData& f, int gamma, double sigma, const PrimeList& primes) {
  require(gamma >= 0, ErrorKind::Domain, "symmetric power needs gamma >= 0");
  require(sigma > 0.5, ErrorKind::Domain, "sym_power_log_partial needs sigma > 1/2");
  require_coprime(f, primes);
  Complex s{0.0, 0.0};
  for (auto p : primes) s += sym_local(std::arg(f.satake_at(p).alpha), gamma, std::pow(double(p), -sigma));
  return s;
}

SymDiffReport sym_diff_identity_check(const PrimitiveFormData& f, int mu, double sigma, const PrimeList& primes) {
  require(mu >= 2, ErrorKind::Domain, "sym_diff_identity_check needs mu >= 2");
  require(sigma > 0.5, ErrorKind::Domain, "sym_diff_identity_check needs sigma > 1/2");
  require_coprime(f, primes);
  SymDiffReport rep;
  rep.mu = mu;
  rep.nu = mu - 2;
  rep.sigma = sigma;
  for (auto p : primes) {
    const auto& sp = f.satake_at(p);
    const double x = std::pow(double(p), -sigma);
    const double phi = std::arg(sp.alpha);
    const Complex diff = sym_local(phi, mu, x) - sym_local(phi, mu - 2, x);
    const Complex endpoint = -std::log(1.0 - std::pow(sp.alpha, mu) * x) - std::log(1.0 - std::pow(sp.beta, mu) * x);
    const double dev = std::abs(diff - endpoint);
    rep.rows.push_back({p, diff, endpoint, dev});
    rep.max_deviation = std::max(rep.max_deviation, dev);
  }
  return rep;
}

double automorphic_support_radius(const PrimeList& primes, double sigma) {
  return 2.0 * support_radius(primes, sigma);
}

GridSpec default_automorphic_grid(const PrimeList& primes, double sigma, int resolution) {
  require(!primes.empty(), ErrorKind::Domain, "default_automorphic_grid needs a nonempty prime set");
  GridSpec g;
  g.half_width = 1.2 * automorphic_support_radius(primes, sigma);
  g.resolution = resolution;
  g.validate();
  return g;
}

GridDensity automorphic_density(const PrimitiveFormData& f, double sigma, const PrimeList& primes,
                                const GridSpec& grid, const AutomorphicDensityOptions& opts) {
  require(sigma > 0.5, ErrorKind::Domain, "automorphic_density needs sigma > 1/2");
  require(!primes.empty(), ErrorKind::Domain, "automorphic_density needs a nonempty prime set");
  require_coprime(f, primes);
  grid.validate();
  std::vector<CurveMap> curves;
  for (auto p : primes) curves.push_back(AutomorphicCurve(f, p, sigma).map());

  int k = decay_oversample(primes.size(), grid, opts.decay_target, opts.max_oversample);
  for (;;) {
    auto cgrid = curve_product_grid(curves, dual_char_grid(grid, k), opts.quadrature);
    if (cgrid.decay.edge_max < opts.decay_target) {
      auto d = invert_char_function(cgrid, grid, opts.inversion);
      d.method = "automorphic-fourier-inversion";
      d.diagnostics["z_half_width"] = cgrid.spec.half_width;
      return d;
    }
    if (k >= opts.max_oversample) {
      char msg[200];
      std::snprintf(msg, sizeof msg,
                    "automorphic_density: characteristic function still %.3g at |z| = %.4g (target %.3g); "
                    "enlarge P",
                    cgrid.decay.edge_max, cgrid.spec.half_width, opts.decay_target);
      throw Error(ErrorKind::Precondition, msg);
    }
    k *= 2;
  }
}

std::int64_t automorphic_prime_cutoff(double sigma, double tolerance) {
  require(sigma > 1.0, ErrorKind::Precondition, "the Euler sum for log L_f needs sigma > 1");
  require(tolerance > 0.0, ErrorKind::Domain, "tolerance must be positive");
  constexpr std::int64_t kMaxCutoff = 10'000'000;
  auto bound = [&](std::int64_t x) { return 4.0 * prime_tail_bound(sigma, double(x)); };
  std::int64_t hi = 17;
  while (bound(hi) > tolerance) {
    require(hi < kMaxCutoff, ErrorKind::Precision,
            "log L_f tail bound cannot reach the tolerance with primes below 1e7");
    hi = std::min(kMaxCutoff, hi * 2);
  }
  std::int64_t lo = hi / 2 < 17 ? 16 : hi / 2;
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    (bound(mid) > tolerance ? lo : hi) = mid;
  }
  return hi;
}

AutomorphicLine sample_log_L_f(const PrimitiveFormData& f, double sigma, double T, double step,
                               const AutomorphicLineOptions& opts) {
  require(T > 0.0 && step > 0.0, ErrorKind::Domain, "sample_log_L_f needs T > 0 and step > 0");
  AutomorphicLine out;
  out.prime_cutoff = automorphic_prime_cutoff(sigma, opts.tail_tolerance);
  out.tail_bound = 4.0 * prime_tail_bound(sigma, double(out.prime_cutoff));
  require(f.tabulated_limit() >= out.prime_cutoff, ErrorKind::Coverage,
          "eigenvalues of " + f.name + " needed up to " + std::to_string(out.prime_cutoff));
  // −log(1 − λy + y²) = Σ_k (α^k + β^k) y^k / k with α^k + β^k = 2cos(kφ); each
  // series is cut where the tail 2r^{K+1}/((K+1)(1 − r)) drops below 1e−18.
  std::vector<double> x, logp;
  std::vector<std::vector<double>> coef;
  for (auto p : primes_up_to(out.prime_cutoff)) {
    if (f.divides_level(p)) continue;
    const double lp = std::log(double(p)), r = std::exp(-sigma * lp);
    const double phi = std::arg(f.satake_at(p).alpha);
    std::vector<double> c;
    double rk = r;
    for (int k = 1;; ++k, rk *= r) {
      c.push_back(2.0 * std::cos(k * phi) / k);
      if (2.0 * rk * r / ((k + 1) * (1.0 - r)) < 1e-18) break;
    }
    logp.push_back(lp);
    x.push_back(r);
    coef.push_back(std::move(c));
  }
  const auto intervals = static_cast<std::size_t>(std::llround(2.0 * T / step));
  require(intervals >= 1, ErrorKind::Domain, "sample_log_L_f: step exceeds 2T");
  const std::size_t count = intervals + 1;
  const double h = 2.0 * T / double(intervals);
  std::vector<Complex> values(count);

  constexpr std::size_t kBlock = 1 << 14, kResync = 256;
  const std::size_t n_blocks = (count + kBlock - 1) / kBlock;
  std::vector<Complex> rot(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) rot[i] = std::polar(1.0, -h * logp[i]);
  parallel_blocks(n_blocks, [&](std::size_t b) {
    const std::size_t lo = b * kBlock, hi = std::min(count, lo + kBlock);
    std::vector<Complex> u(x.size());
    for (std::size_t k = lo; k < hi; ++k) {
      const double t = -T + double(k) * h;
      if ((k - lo) % kResync == 0)
        for (std::size_t i = 0; i < x.size(); ++i) u[i] = std::polar(1.0, -t * logp[i]);
      Complex s{0.0, 0.0};
      for (std::size_t i = 0; i < x.size(); ++i) {
        const Complex y = x[i] * u[i];
        const auto& c = coef[i];
        Complex acc{c.back(), 0.0};
        for (std::size_t j = c.size() - 1; j-- > 0;) acc = acc * y + c[j];
        s += acc * y;
        u[i] *= rot[i];
      }
      values[k] = s;
    }
  });
  out.samples = EmpiricalDistribution::from_line(values);
  return out;
}

double empirical_W_automorphic(const PrimitiveFormData& f, double sigma, double T, double step,
                               const RectangleRegion& region, const AutomorphicLineOptions& opts) {
  return empirical_W(sample_log_L_f(f, sigma, T, step, opts).samples, region);
}

namespace {

// |∫ψ_w(z(θ))dθ| at w = R e^{iφ}.
double jw_modulus(const CurveMap& curve, double R, double phi) {
  return std::abs(curve_char_factor(curve, std::polar(R, phi)).value);
}

struct ShellBest {
  double ratio = -1.0, modulus = 0.0, radius = 0.0, angle = 0.0;
};

// Golden-section maximisation of f on [a, b].
template <class F>
std::pair<double, double> golden_max(F&& f, double a, double b, int iterations = 40) {
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - g * (b - a), e = a + g * (b - a);
  double fc = f(c), fe = f(e);
  for (int it = 0; it < iterations; ++it) {
    if (fc > fe) {
      b = e;
      e = c;
      fe = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = e;
      fc = fe;
      e = a + g * (b - a);
      fe = f(e);
    }
  }
  return fc > fe ? std::pair{c, fc} : std::pair{e, fe};
}

}  // namespace

LemmaConstantReport jw_lemma_constants(const PrimitiveFormData& f, std::int64_t p, double sigma,
                                       std::span<const double> radii) {
  require(!radii.empty(), ErrorKind::Domain, "jw_lemma_constants needs radii");
  for (double R : radii) require(R > 0.0 && std::isfinite(R), ErrorKind::Domain, "radii must be positive");
  const AutomorphicCurve curve(f, p, sigma);
  const CurveMap map = curve.map();
  const double diam = 2.0 * curve.derivative_bound(0);
  LemmaConstantReport rep;
  rep.p = p;
  rep.sigma = sigma;
  rep.lambda = curve.lambda();

  // Trapezoid nodes that resolve ψ_w along the curve at the outermost radius.
  const double r_max = 2.0 * *std::max_element(radii.begin(), radii.end());
  std::size_t m = 0;
  for (int d = 0; d < 16; ++d)
    m = std::max(m, curve_char_factor(map, std::polar(r_max, kPi * (d + 0.5) / 32.0)).nodes);
  std::vector<Complex> nodes(m);
  for (std::size_t k = 0; k < m; ++k) nodes[k] = map(double(k) / double(m));

  // Radial step: 8 samples per shortest interference period 2π/diam.
  const double dr = kTwoPi / (8.0 * diam);
  constexpr std::size_t kDirections = 129;  // over [0, π/2]
  constexpr std::size_t kResync = 64;
  const std::size_t n_shells = radii.size();
  std::vector<ShellBest> best(kDirections * n_shells);

  // |I(w)| is even in arg w and π-periodic, so [0, π/2] covers all directions.
  parallel_blocks(kDirections, [&](std::size_t d) {
    const double phi = 0.5 * kPi * double(d) / double(kDirections - 1);
    const Complex dir = std::polar(1.0, phi);
    std::vector<double> s(m);
    for (std::size_t k = 0; k < m; ++k) s[k] = pairing(dir, nodes[k]);
    std::vector<Complex> u(m), step(m);
    for (std::size_t shell = 0; shell < n_shells; ++shell) {
      const double R = radii[shell];
      const std::size_t J = std::max<std::size_t>(32, std::size_t(std::ceil(R / dr)));
      const double h = R / double(J);
      for (std::size_t k = 0; k < m; ++k) step[k] = std::polar(1.0, h * s[k]);
      ShellBest& b = best[d * n_shells + shell];
      for (std::size_t j = 0; j <= J; ++j) {
        const double rho = R + double(j) * h;
        if (j % kResync == 0)
          for (std::size_t k = 0; k < m; ++k) u[k] = std::polar(1.0, rho * s[k]);
        Complex sum{0.0, 0.0};
        for (std::size_t k = 0; k < m; ++k) {
          sum += u[k];
          u[k] *= step[k];
        }
        const double mod = std::abs(sum) / double(m);
        const double ratio = mod / jw_bound(p, sigma, rho);
        if (ratio > b.ratio) b = {ratio, mod, rho, phi};
      }
    }
  });

  const double dphi = 0.5 * kPi / double(kDirections - 1);
  for (std::size_t shell = 0; shell < n_shells; ++shell) {
    const double R = radii[shell];
    ShellBest b;
    for (std::size_t d = 0; d < kDirections; ++d)
      if (best[d * n_shells + shell].ratio > b.ratio) b = best[d * n_shells + shell];
    // local refinement: angle at the best radius, then radius at the refined angle
    const double h = R / double(std::max<std::size_t>(32, std::size_t(std::ceil(R / dr))));
    const auto [phi, mphi] = golden_max([&](double a) { return jw_modulus(map, b.radius, a); },
                                        std::max(0.0, b.angle - dphi), std::min(0.5 * kPi, b.angle + dphi));
    if (mphi > b.modulus) b = {mphi / jw_bound(p, sigma, b.radius), mphi, b.radius, phi};
    const auto [rho, rratio] =
        golden_max([&](double r) { return jw_modulus(map, r, b.angle) / jw_bound(p, sigma, r); },
                   std::max(R, b.radius - h), std::min(2.0 * R, b.radius + h));
    if (rratio > b.ratio) b = {rratio, rratio * jw_bound(p, sigma, rho), rho, b.angle};
    rep.rows.push_back({R, b.radius, b.modulus, b.angle, b.ratio});
  }

  double cmin = rep.rows.front().constant, cmax = cmin;
  for (std::size_t k = 0; k < rep.rows.size(); ++k) {
    cmin = std::min(cmin, rep.rows[k].constant);
    cmax = std::max(cmax, rep.rows[k].constant);
    if (k > 0) {
      const double q = rep.rows[k].constant / rep.rows[k - 1].constant;
      rep.max_octave_ratio = std::max(rep.max_octave_ratio, std::max(q, 1.0 / q));
    }
  }
  rep.spread = cmax / cmin;
  if (rep.rows.size() < 2) rep.max_octave_ratio = 1.0;
  return rep;
}

}  // namespace mfunc
