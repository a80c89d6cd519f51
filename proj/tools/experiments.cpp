#include "experiments.hpp"

#include <algorithm>
#include <cmath>

#include "mfunc/automorphic.hpp"
#include "mfunc/averages.hpp"
#include "mfunc/char_function.hpp"
#include "mfunc/dirichlet_series.hpp"
#include "mfunc/error.hpp"
#include "mfunc/euler.hpp"
#include "mfunc/grid_io.hpp"
#include "mfunc/inversion.hpp"
#include "mfunc/mdensity.hpp"
#include "mfunc/torus.hpp"
#include "mfunc/zeta.hpp"

namespace mfunc::cli {

namespace fs = std::filesystem;

namespace {

json complex_json(Complex z) { return json::array({real_or_null(z.real()), real_or_null(z.imag())}); }

json prime_json(const PrimeList& primes) {
  json a = json::array();
  for (auto p : primes) a.push_back(p);
  return a;
}

json density_summary(const GridDensity& d) {
  json j = {{"method", d.method},
            {"mass", d.mass()},
            {"conjugation_asymmetry", d.conjugation_asymmetry()},
            {"max_value", d.max_value()},
            {"grid", {{"center", complex_json(d.spec.center)},
                      {"half_width", d.spec.half_width},
                      {"resolution", d.spec.resolution}}}};
  json diag = json::object();
  for (const auto& [k, v] : d.diagnostics) diag[k] = real_or_null(v);
  j["diagnostics"] = diag;
  return j;
}

QuadratureOptions quadrature_options(const ExperimentConfig& cfg) {
  QuadratureOptions q;
  q.tolerance = cfg.tolerance("quadrature");
  return q;
}

InversionOptions inversion_options(const ExperimentConfig& cfg) {
  InversionOptions o;
  o.tail_tolerance = cfg.tolerance("inversion_tail");
  o.negative_mass_limit = cfg.tolerance("negative_mass");
  return o;
}

DensityOptions density_options(const ExperimentConfig& cfg) {
  DensityOptions o;
  o.decay_target = cfg.tolerance("decay_target");
  o.quadrature = quadrature_options(cfg);
  o.inversion = inversion_options(cfg);
  return o;
}

json density_tolerances() {
  return {{"quadrature", 1e-12}, {"inversion_tail", 1e-6}, {"negative_mass", 1e-3}, {"decay_target", 1e-8}};
}

int resolution(const ExperimentConfig& cfg) {
  const auto n = cfg.integer("resolution");
  if (n < 64 || n > 8192 || (n & (n - 1)) != 0)
    throw Error(ErrorKind::Config, "resolution must be a power of two in [64, 8192]");
  return int(n);
}

std::size_t count_of(const ExperimentConfig& cfg, const std::string& key, std::int64_t min_value) {
  const auto n = cfg.integer(key);
  if (n < min_value) throw Error(ErrorKind::Config, "key '" + key + "' must be at least " + std::to_string(min_value));
  return std::size_t(n);
}

double sigma_of(const ExperimentConfig& cfg, double above) {
  const double s = cfg.real("sigma");
  if (!(s > above)) throw Error(ErrorKind::Domain, "sigma must exceed " + format_real(above));
  return s;
}

RectangleRegion rectangle_of(const ExperimentConfig& cfg, const std::string& key) {
  const auto v = cfg.reals(key);
  if (v.size() != 4) throw Error(ErrorKind::Config, "key '" + key + "' must be [u_min, u_max, v_min, v_max]");
  RectangleRegion r{v[0], v[1], v[2], v[3]};
  if (!(r.u_min < r.u_max && r.v_min < r.v_max))
    throw Error(ErrorKind::Config, "key '" + key + "' must have u_min < u_max and v_min < v_max");
  return r;
}

// Centred square panel box; `half` ≤ 0 picks half the grid's half-width.
RectangleRegion panel_box(const GridSpec& grid, double half) {
  if (half <= 0.0) half = 0.5 * grid.half_width;
  const Complex c = grid.center;
  return {c.real() - half, c.real() + half, c.imag() - half, c.imag() + half};
}

// Writes the per-rectangle comparison and returns the largest gap.
double compare_on_panel(const std::vector<RectangleRegion>& panel, const std::function<double(const RectangleRegion&)>& a,
                        const std::function<double(const RectangleRegion&)>& b, CsvTable& table) {
  double worst = 0.0;
  for (const auto& r : panel) {
    const double x = a(r), y = b(r);
    worst = std::max(worst, std::abs(x - y));
    table.cell(r.u_min).cell(r.u_max).cell(r.v_min).cell(r.v_max).cell(x).cell(y).cell(std::abs(x - y));
    table.end_row();
  }
  return worst;
}

CsvTable panel_table(const std::string& a_name, const std::string& b_name) {
  return CsvTable({"u_min", "u_max", "v_min", "v_max", a_name, b_name, "gap"});
}

// ---------------------------------------------------------------------------

void run_density(const ExperimentConfig& cfg, const fs::path& out, Report& rep) {
  const auto P = parse_primes(cfg.document().at("primes"));
  const double sigma = sigma_of(cfg, 0.5);
  const auto method = parse_density_method(cfg.text("method"));
  GridSpec grid = default_density_grid(P, sigma, resolution(cfg));
  if (cfg.real("half_width") > 0.0) grid.half_width = cfg.real("half_width");
  rep.inputs() = {{"primes", prime_json(P)}, {"sigma", sigma}, {"method", std::string(to_string(method))}};

  const auto d = m_sigma_P(P, sigma, grid, method, density_options(cfg));
  save_density(d, out / "density");
  rep.attach_file("density.csv");
  rep.attach_file("density.json");
  rep.outputs() = density_summary(d);

  const auto n = cfg.integer("oracle_samples");
  if (n > 0) {
    const auto seed = cfg.seed();
    const auto hist = torus_histogram(P, sigma, std::size_t(n), seed, grid);
    const auto panel = random_rectangle_panel(count_of(cfg, "panel_size", 1), panel_box(grid, cfg.real("panel_half_width")), seed);
    auto table = panel_table("density", "torus_histogram");
    const double gap = compare_on_panel(
        panel, [&](const RectangleRegion& r) { return integrate_rectangle(d, r); },
        [&](const RectangleRegion& r) { return integrate_rectangle(hist, r); }, table);
    rep.attach(out, "panel", table);
    rep.oracle() = {{"method", "torus-histogram"}, {"samples", n}, {"seed", seed}, {"panel_max_gap", gap}};
  }
}

void run_invert(const ExperimentConfig& cfg, const fs::path& out, Report& rep) {
  const std::string source = cfg.text("source");
  const int k = int(cfg.integer("oversample"));
  const auto inv = inversion_options(cfg);
  rep.inputs() = {{"source", source}, {"oversample", k}};

  if (source == "gaussian") {
    // exp(−s²|z|²/2) ↔ exp(−|w|²/(2s²))/s²
    const double s = cfg.positive("gaussian_width");
    GridSpec grid;
    grid.half_width = 8.0 * s;
    grid.resolution = resolution(cfg);
    const auto c = tabulate_char_function([&](Complex z) { return std::exp(-0.5 * s * s * std::norm(z)); },
                                          dual_char_grid(grid, k));
    const auto d = invert_char_function(c, grid, inv);
    double err = 0.0;
    for (int j = 0; j < grid.resolution; ++j)
      for (int i = 0; i < grid.resolution; ++i)
        err = std::max(err, std::abs(d.at(i, j) - std::exp(-std::norm(grid.node(i, j)) / (2 * s * s)) / (s * s)));
    save_density(d, out / "density");
    rep.attach_file("density.csv");
    rep.attach_file("density.json");
    rep.outputs() = density_summary(d);
    rep.oracle() = {{"method", "closed-form gaussian"}, {"max_cell_error", err}};
    return;
  }

  CharFunctionGrid c;
  GridSpec grid;
  std::optional<GridDensity> reference;
  if (source == "primes") {
    const auto P = parse_primes(cfg.document().at("primes"));
    const double sigma = sigma_of(cfg, 0.5);
    grid = default_density_grid(P, sigma, resolution(cfg));
    c = char_function_grid(P, sigma, dual_char_grid(grid, k), quadrature_options(cfg));
    save_char_function(c, out / "char_function");
    rep.attach_file("char_function.csv");
    rep.attach_file("char_function.json");
    rep.inputs()["primes"] = prime_json(P);
    rep.inputs()["sigma"] = sigma;
    reference = m_sigma_P(P, sigma, grid, DensityMethod::CurveConvolution);
  } else if (source.rfind("file:", 0) == 0) {
    try {
      c = load_char_function(source.substr(5));
    } catch (const Error& e) {
      throw Error(ErrorKind::Config, std::string("char function file: ") + e.what());
    }
    if (c.spec.resolution % k != 0 || c.spec.resolution / k < 64)
      throw Error(ErrorKind::Config, "oversample does not divide the z-grid into a w-grid of at least 64 nodes");
    grid.resolution = c.spec.resolution / k;
    grid.half_width = 0.5 * c.spec.resolution * kPi / c.spec.half_width;
    grid.center = cfg.complex("center");
  } else {
    throw Error(ErrorKind::Config, "source must be \"primes\", \"gaussian\" or \"file:<base>\"");
  }

  const auto d = invert_char_function(c, grid, inv);
  save_density(d, out / "density");
  rep.attach_file("density.csv");
  rep.attach_file("density.json");
  rep.outputs() = density_summary(d);
  rep.outputs()["char_function"] = {{"edge_max", c.decay.edge_max},
                                    {"fitted_exponent", c.decay.fitted_exponent},
                                    {"z_half_width", c.spec.half_width},
                                    {"z_resolution", c.spec.resolution}};
  if (reference) {
    double l1 = 0.0;
    for (std::size_t i = 0; i < d.values.size(); ++i) l1 += std::abs(d.values[i] - reference->values[i]);
    l1 *= grid.cell_measure();
    rep.oracle() = {{"method", "curve-convolution"}, {"l1_difference", l1}};
  }
}

void run_bohr_jessen(const ExperimentConfig& cfg, const fs::path& out, Report& rep) {
  const double sigma = sigma_of(cfg, 0.5);
  const double T = cfg.positive("T"), step = cfg.positive("step");
  const auto P = parse_primes(cfg.document().at("primes"));
  const auto seed = cfg.seed();
  LineOptions lo;
  lo.experimental = cfg.flag("experimental");
  lo.tolerance = cfg.tolerance("zeta");
  rep.inputs() = {{"sigma", sigma}, {"T", T}, {"step", step}, {"density_primes", prime_json(P)}};

  const auto line = log_zeta_line(sigma, -T, T, step, lo);
  const auto grid = default_density_grid(P, sigma, resolution(cfg));
  const auto density = m_sigma_P(P, sigma, grid, DensityMethod::FourierInversion, density_options(cfg));
  const auto all = EmpiricalDistribution::from_line(line);

  const auto R = rectangle_of(cfg, "rectangle");
  const double model = integrate_rectangle(density, R);
  CsvTable conv({"parameter", "estimate", "gap"});
  const std::size_t n = line.values.size(), levels = count_of(cfg, "convergence_levels", 1);
  for (std::size_t l = levels; l-- > 0;) {
    // central sub-window [−T/2^l, T/2^l] of the same samples
    const std::size_t half = (n / 2) >> l;
    const std::size_t lo_i = n / 2 - half, len = 2 * half + 1;
    const auto sub = EmpiricalDistribution::from_line(
        std::span<const Complex>(line.values).subspan(lo_i, len),
        std::span<const std::uint8_t>(line.flagged).subspan(lo_i, len));
    const double est = empirical_W(sub, R);
    conv.cell(T / double(1u << l)).cell(est).cell(std::abs(est - model));
    conv.end_row();
  }
  rep.attach(out, "convergence", conv);

  const auto panel = random_rectangle_panel(count_of(cfg, "panel_size", 1), panel_box(grid, cfg.real("panel_half_width")), seed);
  auto table = panel_table("empirical", "density");
  const double gap = compare_on_panel(
      panel, [&](const RectangleRegion& r) { return empirical_W(all, r); },
      [&](const RectangleRegion& r) { return integrate_rectangle(density, r); }, table);
  rep.attach(out, "panel", table);

  const double empirical = empirical_W(all, R);
  rep.outputs() = {{"samples", line.values.size()},
                   {"excluded_samples", all.excluded},
                   {"rectangle", {R.u_min, R.u_max, R.v_min, R.v_max}},
                   {"empirical_W", empirical},
                   {"density", density_summary(density)},
                   {"gap", gap}};
  rep.oracle() = {{"method", "fourier-inversion density"},
                  {"rectangle_probability", model},
                  {"rectangle_gap", std::abs(empirical - model)},
                  {"panel_max_gap", gap}};
}

// Fourier-kernel argument of a test function spec, if it is one.
std::optional<Complex> kernel_of(const std::string& spec) {
  if (spec.rfind("fourier:", 0) != 0) return std::nullopt;
  const auto comma = spec.find(',');
  return Complex{std::stod(spec.substr(8, comma - 8)), std::stod(spec.substr(comma + 1))};
}

TorusIntegral torus_oracle(const ExperimentConfig& cfg, const PrimeList& P, double sigma, const TestFunction& phi) {
  TorusIntegralOptions o;
  o.points = count_of(cfg, "lattice_points", 2);
  if (P.size() > o.max_lattice_dimension) o.seed = cfg.seed();
  return torus_integral(P, sigma, phi, o);
}

void run_chi_tau(const ExperimentConfig& cfg, const fs::path& out, Report& rep) {
  const auto P = parse_primes(cfg.document().at("primes"));
  const double sigma = sigma_of(cfg, 0.5);
  const double T = cfg.positive("T"), step = cfg.positive("step");
  const auto spec = cfg.text("phi");
  const auto phi = parse_test_function(spec);
  rep.inputs() = {{"primes", prime_json(P)}, {"sigma", sigma}, {"T", T}, {"step", step}, {"phi", phi.describe()}};

  Complex exact;
  if (const auto z = kernel_of(spec)) {
    exact = char_function_P(P, sigma, *z, quadrature_options(cfg));
    rep.oracle() = {{"method", "char_function_P"}, {"value", complex_json(exact)}};
  } else {
    const auto t = torus_oracle(cfg, P, sigma, phi);
    exact = t.value;
    rep.oracle() = {{"method", t.method}, {"points", t.points}, {"value", complex_json(exact)}};
  }

  CsvTable conv({"parameter", "estimate", "gap"});
  Complex value;
  const std::size_t levels = count_of(cfg, "convergence_levels", 1);
  for (std::size_t l = levels; l-- > 0;) {
    const double Tl = T / double(1u << l);
    value = chi_tau_average(P, sigma, phi, Tl, step);
    conv.cell(Tl).cell(value.real()).cell(std::abs(value - exact));
    conv.end_row();
  }
  rep.attach(out, "convergence", conv);
  rep.outputs() = {{"value", complex_json(value)}, {"gap", std::abs(value - exact)}};
}

void run_char_avg(const ExperimentConfig& cfg, const fs::path& out, Report& rep) {
  const auto P = parse_primes(cfg.document().at("primes"));
  const double sigma = sigma_of(cfg, 0.5);
  const auto phi = parse_test_function(cfg.text("phi"));
  const auto moduli = cfg.integers("moduli");
  if (moduli.empty()) throw Error(ErrorKind::Config, "moduli must not be empty");
  rep.inputs() = {{"primes", prime_json(P)}, {"sigma", sigma}, {"phi", phi.describe()}, {"moduli", moduli}};

  const auto t = torus_oracle(cfg, P, sigma, phi);
  rep.oracle() = {{"method", t.method}, {"points", t.points}, {"value", complex_json(t.value)}};

  CsvTable conv({"parameter", "estimate", "gap"});
  json rows = json::array(), warnings = json::array();
  std::vector<double> gaps;
  for (auto q : moduli) {
    const auto a = modulus_average(q, P, sigma, phi);
    gaps.push_back(std::abs(a.value - t.value));
    conv.cell(q).cell(a.value.real()).cell(gaps.back());
    conv.end_row();
    rows.push_back({{"q", q}, {"value", complex_json(a.value)}, {"characters", a.characters}, {"gap", gaps.back()}});
    if (a.warning) warnings.push_back(*a.warning);
  }
  rep.attach(out, "convergence", conv);
  int inversions = 0;
  for (std::size_t k = 1; k < gaps.size(); ++k) inversions += gaps[k] > gaps[k - 1];
  rep.outputs() = {{"moduli", rows}, {"final_gap", gaps.back()}, {"inversions", inversions}, {"warnings", warnings}};

  const auto m = cfg.integer("outer_m");
  if (m > 0) {
    const Complex v = ihara_outer_average(m, P, sigma, phi);
    rep.outputs()["outer_average"] = {{"m", m}, {"value", complex_json(v)}, {"gap", std::abs(v - t.value)}};
  }
}

std::vector<double> log_spaced(double lo, double hi, std::size_t n) {
  std::vector<double> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = n == 1 ? lo : lo * std::pow(hi / lo, double(i) / double(n - 1));
  return r;
}

void run_jw_report(const ExperimentConfig& cfg, const fs::path& out, Report& rep) {
  const auto P = parse_primes(cfg.document().at("primes"));
  const double sigma = sigma_of(cfg, 0.0);
  const double rmin = cfg.positive("radius_min"), rmax = cfg.positive("radius_max");
  if (!(rmax > rmin)) throw Error(ErrorKind::Config, "radius_max must exceed radius_min");
  const auto curve = cfg.text("curve");
  rep.inputs() = {{"primes", prime_json(P)}, {"sigma", sigma}, {"curve", curve}};

  if (curve == "prime") {
    const auto radii = log_spaced(rmin, rmax, count_of(cfg, "radius_count", 2));
    const auto r = jw_decay_report(P, sigma, radii, int(count_of(cfg, "directions", 1)));
    CsvTable factors({"p", "radius", "max_modulus", "ratio"});
    for (const auto& row : r.rows) {
      factors.cell(row.p).cell(row.radius).cell(row.max_modulus).cell(row.ratio);
      factors.end_row();
    }
    CsvTable env({"radius", "product_envelope"});
    for (std::size_t i = 0; i < r.radii.size(); ++i) {
      env.cell(r.radii[i]).cell(r.product_envelope[i]);
      env.end_row();
    }
    rep.attach(out, "factors", factors);
    rep.attach(out, "envelope", env);
    const double expected = -0.5 * double(P.size());
    rep.outputs() = {{"fitted_exponent", r.fitted_exponent},
                     {"max_ratio", r.max_ratio},
                     {"max_octave_change", r.max_octave_change}};
    rep.oracle() = {{"method", "decay law (1+|z|)^(-|P|/2)"},
                    {"expected_exponent", expected},
                    {"gap", r.fitted_exponent - expected}};
    return;
  }
  if (curve != "automorphic") throw Error(ErrorKind::Config, "curve must be \"prime\" or \"automorphic\"");

  const double eps = cfg.real("epsilon");
  const auto f = load_form(cfg, P.size() ? P[P.size() - 1] : 2);
  std::vector<double> radii;
  for (double r = rmin; r <= rmax * (1 + 1e-12); r *= 2) radii.push_back(r);
  CsvTable table({"p", "radius", "best_radius", "sup_modulus", "best_angle", "constant"});
  json per_p = json::array(), skipped = json::array();
  double worst = 0.0;
  for (auto p : P) {
    if (!in_pf(f, p, eps)) {
      skipped.push_back({{"p", p}, {"lambda", f.lambda(p)}});
      continue;
    }
    const auto r = jw_lemma_constants(f, p, sigma, radii);
    for (const auto& row : r.rows) {
      table.cell(p).cell(row.radius).cell(row.best_radius).cell(row.sup_modulus).cell(row.best_angle).cell(row.constant);
      table.end_row();
    }
    worst = std::max(worst, r.max_octave_ratio);
    per_p.push_back({{"p", p}, {"lambda", r.lambda}, {"max_octave_ratio", r.max_octave_ratio}, {"spread", r.spread}});
  }
  rep.attach(out, "lemma_constants", table);
  rep.outputs() = {{"form", f.name}, {"epsilon", eps}, {"primes", per_p}, {"skipped", skipped},
                   {"max_octave_ratio", worst}};
}

void run_automorphic_density(const ExperimentConfig& cfg, const fs::path& out, Report& rep) {
  const auto P = parse_primes(cfg.document().at("primes"));
  const double sigma = sigma_of(cfg, 0.5);
  const auto f = load_form(cfg, P.size() ? P[P.size() - 1] : 2);
  const auto grid = default_automorphic_grid(P, sigma, resolution(cfg));
  AutomorphicDensityOptions o;
  o.decay_target = cfg.tolerance("decay_target");
  o.quadrature = quadrature_options(cfg);
  o.inversion = inversion_options(cfg);
  rep.inputs() = {{"form", f.name}, {"primes", prime_json(P)}, {"sigma", sigma}};

  const auto d = automorphic_density(f, sigma, P, grid, o);
  save_density(d, out / "density");
  rep.attach_file("density.csv");
  rep.attach_file("density.json");
  rep.outputs() = density_summary(d);

  const auto n = cfg.integer("oracle_samples");
  if (n > 0) {
    const auto seed = cfg.seed();
    std::vector<CurveMap> curves;
    for (auto p : P) curves.push_back(AutomorphicCurve(f, p, sigma).map());
    const auto hist = torus_histogram(curves, std::size_t(n), seed, grid);
    const auto panel = random_rectangle_panel(count_of(cfg, "panel_size", 1), panel_box(grid, cfg.real("panel_half_width")), seed);
    auto table = panel_table("density", "torus_histogram");
    const double gap = compare_on_panel(
        panel, [&](const RectangleRegion& r) { return integrate_rectangle(d, r); },
        [&](const RectangleRegion& r) { return integrate_rectangle(hist, r); }, table);
    rep.attach(out, "panel", table);
    rep.oracle() = {{"method", "torus-histogram"}, {"samples", n}, {"seed", seed}, {"panel_max_gap", gap}};
  }
}

void run_sympow_identity(const ExperimentConfig& cfg, const fs::path& out, Report& rep) {
  const auto P = parse_primes(cfg.document().at("primes"));
  const double sigma = sigma_of(cfg, 0.5);
  const int mu = int(cfg.integer("mu"));
  const auto f = load_form(cfg, P.size() ? P[P.size() - 1] : 2);
  rep.inputs() = {{"form", f.name}, {"primes", prime_json(P)}, {"sigma", sigma}, {"mu", mu}};

  const auto r = sym_diff_identity_check(f, mu, sigma, P);
  CsvTable table({"p", "difference_re", "difference_im", "endpoint_re", "endpoint_im", "deviation"});
  Complex total{0.0, 0.0};
  for (const auto& row : r.rows) {
    table.cell(row.p).cell(row.difference.real()).cell(row.difference.imag()).cell(row.endpoint.real())
        .cell(row.endpoint.imag()).cell(row.deviation);
    table.end_row();
    total += row.difference;
  }
  rep.attach(out, "identity", table);
  rep.outputs() = {{"mu", r.mu}, {"nu", r.nu}, {"log_difference", complex_json(total)}, {"max_deviation", r.max_deviation}};
}

void run_pf_census(const ExperimentConfig& cfg, const fs::path& out, Report& rep) {
  const double eps = cfg.real("epsilon");
  if (eps < 0.0) throw Error(ErrorKind::Config, "epsilon must be nonnegative");
  const auto X = cfg.integer("X");
  const auto f = load_form(cfg, X);
  rep.inputs() = {{"form", f.name}, {"epsilon", eps}, {"X", X}};

  const auto c = pf_epsilon_census(f, eps, X);
  CsvTable table({"p", "lambda", "in_Pf", "abs_lambda"});
  for (const auto& row : c.rows) {
    table.cell(row.p).cell(row.lambda).cell(row.in_pf).cell(std::abs(row.lambda));
    table.end_row();
  }
  rep.attach(out, "census", table);
  const double st = sato_tate_mass_above(std::max(0.0, std::sqrt(2.0) - eps));
  rep.outputs() = {{"primes", c.rows.size()}, {"members", c.members}, {"density", c.density}};
  rep.oracle() = {{"method", "Sato-Tate mass of |2cos θ| > √2 − ε"}, {"value", st}, {"gap", std::abs(c.density - st)}};
}

void run_lambda_coeffs(const ExperimentConfig& cfg, const fs::path& out, Report& rep) {
  const Complex z = cfg.complex("z");
  const auto N = cfg.integer("N");
  if (N < 1) throw Error(ErrorKind::Config, "N must be at least 1");
  const double sigma = sigma_of(cfg, 0.5);
  const auto series_n = cfg.integer("series_N");
  if (series_n < 1) throw Error(ErrorKind::Config, "series_N must be at least 1");
  rep.inputs() = {{"z", complex_json(z)}, {"N", N}, {"sigma", sigma}, {"series_N", series_n}};

  const auto table = lambda_coefficients(z, N);
  CsvTable csv({"n", "re", "im"});
  for (std::int64_t n = 1; n <= N; ++n) {
    csv.cell(n).cell(table(n).real()).cell(table(n).imag());
    csv.end_row();
  }
  rep.attach(out, "lambda", csv);

  std::optional<PrimeList> smooth;
  const auto& sp = cfg.document().at("smooth_primes");
  if (!(sp.is_string() && sp.get<std::string>().empty())) smooth = parse_primes(sp);
  SeriesOptions so;
  so.tail_tolerance = cfg.tolerance("series");
  const auto s = mtilde_dirichlet(sigma, z, series_n, smooth, so);
  rep.outputs() = {{"mtilde", complex_json(s.value)},
                   {"tail_bound", s.tail_bound},
                   {"terms", s.terms},
                   {"warning", s.warning ? json(*s.warning) : json(nullptr)}};
  if (smooth) {
    const Complex q = char_function_P(*smooth, sigma, z, quadrature_options(cfg));
    rep.oracle() = {{"method", "quadrature product"}, {"value", complex_json(q)}, {"gap", std::abs(q - s.value)}};
  }
}

json with_tolerances(json defaults, json tolerances) {
  defaults["tolerances"] = std::move(tolerances);
  return defaults;
}

}  // namespace

const std::vector<Experiment>& experiments() {
  static const std::vector<Experiment> list = {
      {"density", "density of the finite Euler-log map (m_sigma_P)",
       with_tolerances({{"primes", "first:10"},
                        {"sigma", 1.0},
                        {"method", "fourier-inversion"},
                        {"resolution", 256},
                        {"half_width", 0.0},
                        {"oracle_samples", 0},
                        {"panel_size", 100},
                        {"panel_half_width", 0.0}},
                       density_tolerances()),
       run_density},
      {"invert", "characteristic function to density by Fourier inversion",
       with_tolerances({{"source", "primes"},
                        {"primes", "first:10"},
                        {"sigma", 1.0},
                        {"resolution", 256},
                        {"oversample", 1},
                        {"gaussian_width", 0.5},
                        {"center", json::array({0.0, 0.0})}},
                       {{"quadrature", 1e-12}, {"inversion_tail", 1e-6}, {"negative_mass", 1e-3}}),
       run_invert},
      {"bohr-jessen", "empirical distribution of log zeta on a vertical line against the density",
       with_tolerances({{"sigma", 1.5},
                        {"T", 10000.0},
                        {"step", 0.01},
                        {"primes", "upto:100"},
                        {"resolution", 256},
                        {"experimental", false},
                        {"rectangle", json::array({0.2, 0.6, -0.3, 0.3})},
                        {"panel_size", 100},
                        {"panel_half_width", 0.0},
                        {"convergence_levels", 5}},
                       [] {
                         auto t = density_tolerances();
                         t["zeta"] = 1e-10;
                         return t;
                       }()),
       run_bohr_jessen},
      {"chi-tau", "continuous-character average of a test function",
       with_tolerances({{"primes", "first:6"},
                        {"sigma", 1.0},
                        {"T", 100000.0},
                        {"step", 0.02},
                        {"phi", "fourier:1,0"},
                        {"lattice_points", 65537},
                        {"convergence_levels", 5}},
                       {{"quadrature", 1e-12}}),
       run_chi_tau},
      {"char-avg", "average over primitive Dirichlet characters of prime moduli",
       with_tolerances({{"primes", "list:2,3"},
                        {"sigma", 1.0},
                        {"phi", "gaussian:0.2,0,0.5"},
                        {"moduli", json::array({101, 211, 401, 809, 1009})},
                        {"outer_m", 0},
                        {"lattice_points", 65537}},
                       json::object()),
       run_char_avg},
      {"jw-report", "decay of one-prime characteristic factors and lemma constants",
       with_tolerances({{"curve", "prime"},
                        {"primes", "first:4"},
                        {"sigma", 1.0},
                        {"radius_min", 10.0},
                        {"radius_max", 1000.0},
                        {"radius_count", 64},
                        {"directions", 256},
                        {"form", "delta"},
                        {"weight", 12},
                        {"level", 1},
                        {"epsilon", 0.1}},
                       json::object()),
       run_jw_report},
      {"automorphic-density", "density of log L_P(f, sigma + it) for a primitive form",
       with_tolerances({{"form", "delta"},
                        {"weight", 12},
                        {"level", 1},
                        {"primes", "upto:100"},
                        {"sigma", 1.0},
                        {"resolution", 256},
                        {"oracle_samples", 0},
                        {"panel_size", 20},
                        {"panel_half_width", 0.0}},
                       density_tolerances()),
       run_automorphic_density},
      {"sympow-identity", "symmetric-power log-difference identity",
       with_tolerances({{"form", "delta"}, {"weight", 12}, {"level", 1}, {"mu", 3}, {"sigma", 1.0}, {"primes", "upto:100"}},
                       json::object()),
       run_sympow_identity},
      {"pf-census", "census of P_f(epsilon) among primes up to X",
       with_tolerances({{"form", "delta"}, {"weight", 12}, {"level", 1}, {"epsilon", 0.1}, {"X", 10000}}, json::object()),
       run_pf_census},
      {"lambda-coeffs", "coefficients lambda_z(n) and the Dirichlet series of the characteristic function",
       with_tolerances({{"z", json::array({1.0, 0.0})},
                        {"N", 100},
                        {"sigma", 1.5},
                        {"series_N", 10000},
                        {"smooth_primes", ""}},
                       {{"series", 1e-6}, {"quadrature", 1e-12}}),
       run_lambda_coeffs},
  };
  return list;
}

}  // namespace mfunc::cli
