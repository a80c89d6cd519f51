#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "mfunc/averages.hpp"
#include "mfunc/char_function.hpp"
#include "mfunc/characters.hpp"
#include "mfunc/error.hpp"
#include "mfunc/euler.hpp"
#include "mfunc/lattice.hpp"
#include "mfunc/mdensity.hpp"
#include "mfunc/test_function.hpp"
#include "oracles.hpp"

using namespace mfunc;

namespace {

template <class Fn>
ErrorKind kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no mfunc::Error thrown";
  return ErrorKind::Config;
}

// ∫₀¹ Φ(−log(1 − r e^{2πiθ})) dθ
Complex circle_integral(const TestFunction& phi, double r) {
  return oracle::adaptive_integral([&](double th) { return phi(oracle::neg_log_factor(r, th)); });
}

// ∫∫ Φ(g₁(θ₁) + g₂(θ₂)) by nested adaptive quadrature
Complex two_circle_integral(const TestFunction& phi, double r1, double r2) {
  return oracle::adaptive_integral([&](double a) {
    const Complex w1 = oracle::neg_log_factor(r1, a);
    return oracle::adaptive_integral([&](double b) { return phi(w1 + oracle::neg_log_factor(r2, b)); }, 1e-10);
  }, 1e-10);
}

EmpiricalDistribution scattered(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> g(0.0, 0.7);
  std::uniform_int_distribution<int> u(1, 4);  // small integer weights keep every partial sum exact
  EmpiricalDistribution d;
  for (std::size_t k = 0; k < n; ++k) {
    d.samples.emplace_back(g(gen), g(gen));
    d.weights.push_back(0.5 * u(gen));
  }
  // a far-away sample tops the total up to a power of two, so normalised fractions stay exact
  const double total = std::accumulate(d.weights.begin(), d.weights.end(), 0.0);
  d.samples.emplace_back(1e6, 1e6);
  d.weights.push_back(std::exp2(std::ceil(std::log2(total + 1.0))) - total);
  return d;
}

}  // namespace

// ---------------------------------------------------------------------------
// Test functions

TEST(TestFunctionKinds, ValuesAndValidation) {
  const auto rect = TestFunction::rectangle({0.0, 1.0, 0.0, 1.0});
  EXPECT_EQ(rect.kind(), TestFunction::Kind::Rectangle);
  EXPECT_EQ(rect({0.5, 0.5}), Complex(1.0, 0.0));
  EXPECT_EQ(rect({1.0, 0.5}), Complex(0.0, 0.0));

  const auto g = TestFunction::gaussian({1.0, -1.0}, 0.5);
  EXPECT_DOUBLE_EQ(g({1.0, -1.0}).real(), 1.0);
  EXPECT_NEAR(g({1.5, -1.0}).real(), std::exp(-0.5), 1e-15);

  EXPECT_TRUE(TestFunction::one().is_one());
  EXPECT_EQ(TestFunction::builtin("re")({2.0, 3.0}), Complex(2.0, 0.0));
  EXPECT_EQ(TestFunction::builtin("im")({2.0, 3.0}), Complex(3.0, 0.0));
  EXPECT_NEAR(TestFunction::builtin("cos-re")({1.0, 3.0}).real(), std::cos(1.0), 1e-15);

  const Complex z{0.3, -1.2}, w{0.7, 0.4};
  EXPECT_NEAR(std::abs(TestFunction::fourier_kernel(z)(w) - std::exp(Complex(0, 0.3 * 0.7 - 1.2 * 0.4))), 0.0, 1e-15);

  EXPECT_EQ(kind_of([] { TestFunction::gaussian({}, 0.0); }), ErrorKind::Domain);
  EXPECT_EQ(kind_of([] { TestFunction::builtin("sinh"); }), ErrorKind::Config);
  EXPECT_EQ(kind_of([] { TestFunction::rectangle({1.0, 0.0, 0.0, 1.0}); }), ErrorKind::Domain);
  EXPECT_NE(g.describe().find("gaussian"), std::string::npos);
}

// ---------------------------------------------------------------------------
// Characters

TEST(CharacterTable, Examples) {
  EXPECT_EQ(build_character_table(5).primitive_count(), 3);
  const auto t7 = build_character_table(7);
  EXPECT_EQ(t7.g, 3);
  EXPECT_NEAR(std::abs(t7.value(1, 3) - std::polar(1.0, 2 * oracle::kPi / 6)), 0.0, 1e-15);
  EXPECT_EQ(t7.value(2, 14), Complex(0.0, 0.0));
  EXPECT_EQ(kind_of([] { build_character_table(9); }), ErrorKind::Domain);
  EXPECT_EQ(kind_of([] { build_character_table(2); }), ErrorKind::Domain);
}

TEST(CharacterTable, DiscreteLogMatchesPowers) {
  for (std::int64_t q : {3, 11, 101, 1009}) {
    const auto t = build_character_table(q);
    std::int64_t x = 1;
    for (std::int64_t k = 0; k < q - 1; ++k) {
      EXPECT_EQ(t.dlog[std::size_t(x)], k);
      x = x * t.g % q;
    }
  }
}

TEST(CharacterTable, OrthogonalityAndMultiplicativity) {
  for (std::int64_t q : {5, 7, 13, 31}) {
    const auto t = build_character_table(q);
    for (std::int64_t a = 1; a < q; ++a) {
      Complex over_chars = 0;
      for (std::int64_t j = 0; j < t.count(); ++j) over_chars += t.value(j, a);
      EXPECT_NEAR(std::abs(over_chars - Complex(a == 1 ? double(q - 1) : 0.0, 0.0)), 0.0, 1e-11) << q << " " << a;
    }
    for (std::int64_t j = 1; j < t.count(); ++j) {
      ASSERT_TRUE(t.is_primitive(j));
      Complex over_units = 0;
      for (std::int64_t a = 1; a < q; ++a) over_units += t.value(j, a);
      EXPECT_NEAR(std::abs(over_units), 0.0, 1e-11);
      EXPECT_NEAR(std::abs(t.value(j, 1) - 1.0), 0.0, 1e-15);
      for (std::int64_t a = 1; a < q; ++a)
        for (std::int64_t b = 1; b < q; ++b)
          EXPECT_NEAR(std::abs(t.value(j, a * b) - t.value(j, a) * t.value(j, b)), 0.0, 1e-12);
    }
    EXPECT_FALSE(t.is_primitive(0));
  }
}

TEST(LogLPChar, QuadraticCharacterMod5) {
  const auto t = build_character_table(5);
  const auto P = make_prime_list({2, 3});
  // j = (q−1)/2 is the quadratic character; compare against Legendre symbols
  for (std::int64_t a = 1; a < 5; ++a) EXPECT_NEAR(t.value(2, a).real(), oracle::legendre(a, 5), 1e-15);
  const Complex got = log_L_P_char(P, 1.0, t, 2);
  EXPECT_NEAR(std::abs(got - Complex(-std::log(1.5) - std::log(4.0 / 3.0), 0.0)), 0.0, 1e-14);
  const Character legendre = [](std::int64_t n) { return Complex(oracle::legendre(n, 5), 0.0); };
  EXPECT_NEAR(std::abs(log_L_P_char(P, 1.0, legendre) - got), 0.0, 1e-15);
}

TEST(LogLPChar, TrivialCharacterAndVanishingTerms) {
  const auto P = first_primes(12);
  const Character one = [](std::int64_t) { return Complex(1.0, 0.0); };
  for (double sigma : {0.6, 1.0, 2.0})
    EXPECT_NEAR(std::abs(log_L_P_char(P, sigma, one) - euler_log_partial({sigma, 0.0}, P)), 0.0, 1e-13);

  // q = 7 divides 7 ∈ P: its term drops out
  const auto t = build_character_table(7);
  const auto with7 = make_prime_list({2, 3, 7}), without7 = make_prime_list({2, 3});
  for (std::int64_t j = 0; j < 6; ++j)
    EXPECT_NEAR(std::abs(log_L_P_char(with7, 1.0, t, j) - log_L_P_char(without7, 1.0, t, j)), 0.0, 1e-15);
  EXPECT_EQ(kind_of([&] { log_L_P_char(P, 0.5, one); }), ErrorKind::Domain);
}

// ---------------------------------------------------------------------------
// Empirical distribution

TEST(EmpiricalW, TrivialRegions) {
  const auto d = scattered(500, 1);
  EXPECT_DOUBLE_EQ(empirical_W(d, RectangleRegion::whole_plane()), 1.0);
  EXPECT_DOUBLE_EQ(empirical_W(d, {100.0, 101.0, 100.0, 101.0}), 0.0);
  EmpiricalDistribution empty;
  EXPECT_EQ(kind_of([&] { empirical_W(empty, RectangleRegion::whole_plane()); }), ErrorKind::Domain);
  auto bad = d;
  bad.weights[3] = -1.0;
  EXPECT_EQ(kind_of([&] { empirical_W(bad, RectangleRegion::whole_plane()); }), ErrorKind::Domain);
}

TEST(EmpiricalW, MonotoneAndAdditive) {
  const auto d = scattered(4000, 2);
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    double a = u(gen), b = u(gen), c = u(gen), e = u(gen);
    if (a > b) std::swap(a, b);
    if (c > e) std::swap(c, e);
    const RectangleRegion inner{a, b, c, e};
    const RectangleRegion outer{a - 0.3, b + 0.1, c - 0.2, e + 0.4};
    EXPECT_LE(empirical_W(d, inner), empirical_W(d, outer));

    // split at an interior abscissa: both halves are half-open, so the counts add up
    const double m = a + (b - a) * 0.37;
    const double left = empirical_W(d, {a, m, c, e}), right = empirical_W(d, {m, b, c, e});
    EXPECT_EQ(left + right, empirical_W(d, inner));
  }
}

TEST(EmpiricalW, LineWeightsAndFlags) {
  const std::vector<Complex> v{{0, 0}, {1, 0}, {2, 0}, {3, 0}};
  const std::vector<std::uint8_t> flags{0, 0, 1, 0};
  const auto d = EmpiricalDistribution::from_line(v, flags);
  EXPECT_EQ(d.samples.size(), 3u);
  EXPECT_EQ(d.excluded, 1u);
  EXPECT_DOUBLE_EQ(d.total_weight(), 2.0);
  EXPECT_DOUBLE_EQ(empirical_W(d, {-0.5, 0.5, -1, 1}), 0.25);
  EXPECT_EQ(kind_of([&] { EmpiricalDistribution::from_line(v, std::vector<std::uint8_t>{0}); }), ErrorKind::Domain);
}

TEST(EmpiricalW, VerticalLineMatchesDensity) {
  const auto dist = sample_log_zeta(1.5, 2000.0, 0.01);
  EXPECT_EQ(dist.excluded, 0u);
  const auto P = primes_up_to(100);
  const auto grid = default_density_grid(P, 1.5, 256);
  const auto density = m_sigma_P(P, 1.5, grid, DensityMethod::FourierInversion);
  for (const RectangleRegion& R : {RectangleRegion{0.2, 0.6, -0.3, 0.3}, RectangleRegion{-0.1, 0.3, -0.2, 0.0}}) {
    const double empirical = empirical_W(dist, R), model = integrate_rectangle(density, R);
    EXPECT_NEAR(empirical, model, 0.02) << R.u_min << " " << R.v_min;
  }
}

// ---------------------------------------------------------------------------
// χ_τ average

TEST(ChiTau, ConstantAndRealPart) {
  const auto P2 = make_prime_list({2});
  EXPECT_NEAR(std::abs(chi_tau_average(first_primes(6), 1.0, TestFunction::one(), 50.0, 0.1) - 1.0), 0.0, 1e-14);
  const Complex re = chi_tau_average(P2, 1.0, TestFunction::builtin("re"), 1e5, 0.01);
  EXPECT_NEAR(re.real(), 0.0, 1e-3);
  EXPECT_EQ(kind_of([&] { chi_tau_average(P2, 0.5, TestFunction::one(), 1.0, 0.1); }), ErrorKind::Domain);
  EXPECT_EQ(kind_of([&] { chi_tau_average(P2, 1.0, TestFunction::one(), 0.0, 0.1); }), ErrorKind::Domain);
}

TEST(ChiTau, SeveralFunctionsInOnePassAgree) {
  const auto P = first_primes(4);
  const std::vector<TestFunction> phis{TestFunction::gaussian({0.2, 0.1}, 0.4), TestFunction::builtin("cos-re"),
                                       TestFunction::fourier_kernel({1.0, 2.0})};
  const auto joint = chi_tau_average(P, 1.2, phis, 300.0, 0.05);
  for (std::size_t f = 0; f < phis.size(); ++f)
    EXPECT_EQ(joint[f], chi_tau_average(P, 1.2, phis[f], 300.0, 0.05));
}

TEST(ChiTau, GaussianMatchesTorusIntegral) {
  const auto P = first_primes(6);
  const auto phi = TestFunction::gaussian({0.3, 0.0}, 0.5);
  const Complex tau_avg = chi_tau_average(P, 1.0, phi, 1e5, 0.02);
  const auto torus = torus_integral(P, 1.0, phi);
  EXPECT_EQ(torus.method, "korobov-lattice");
  EXPECT_NEAR(std::abs(tau_avg - torus.value), 0.0, 1e-2);
}

TEST(ChiTau, FourierKernelApproachesCharFunction) {
  const auto P = first_primes(6);
  for (Complex z : {Complex(1.0, 0.0), Complex(0.0, 3.0), Complex(-2.5, 2.5)}) {
    const Complex avg = chi_tau_average(P, 1.0, TestFunction::fourier_kernel(z), 1e5, 0.05);
    EXPECT_LT(std::abs(avg - char_function_P(P, 1.0, z)), 3e-2) << z;
  }
}

// ---------------------------------------------------------------------------
// Modulus average

TEST(ModulusAverage, ConstantAndErrors) {
  const auto P = make_prime_list({2, 3});
  for (std::int64_t q : {3, 5, 101}) {
    const auto a = modulus_average(q, P, 1.0, TestFunction::one());
    EXPECT_NEAR(std::abs(a.value - 1.0), 0.0, 1e-14);
    EXPECT_EQ(a.characters, std::size_t(q - 2));
  }
  EXPECT_TRUE(modulus_average(3, P, 1.0, TestFunction::one()).warning.has_value());
  EXPECT_FALSE(modulus_average(5, P, 1.0, TestFunction::one()).warning.has_value());
  EXPECT_EQ(kind_of([&] { modulus_average(2, P, 1.0, TestFunction::one()); }), ErrorKind::Domain);
  EXPECT_EQ(kind_of([&] { modulus_average(15, P, 1.0, TestFunction::one()); }), ErrorKind::Domain);
}

TEST(ModulusAverage, OrthogonalityIsExactForMonomials) {
  // exp(−log L_P) = ∏(1 − χ(p)p^{−σ}) expands into monomials χ(n); over primitive
  // characters Avg χ(n) = 1 for n ≡ 1 and −1/(q−2) otherwise.
  const auto P = make_prime_list({2, 3});
  const double sigma = 1.3, a2 = std::pow(2.0, -sigma), a3 = std::pow(3.0, -sigma);
  for (std::int64_t q : {7, 11, 13, 17, 19, 23, 29}) {
    const auto t = build_character_table(q);
    Complex sum = 0;
    for (std::int64_t j = 1; j < t.count(); ++j) sum += std::exp(-log_L_P_char(P, sigma, t, j));
    const Complex avg = sum / double(q - 2);
    const double expected = 1.0 + (a2 + a3 - a2 * a3) / double(q - 2);
    EXPECT_NEAR(std::abs(avg - expected), 0.0, 1e-13) << q;
  }
}

TEST(ModulusAverage, FourierKernelMatchesCharacterSum) {
  // same sum through modulus_average: Φ = ψ_z against an explicit loop over the table
  const auto P = first_primes(3);
  const Complex z{0.8, -0.4};
  const auto phi = TestFunction::fourier_kernel(z);
  for (std::int64_t q : {11, 37}) {
    const auto t = build_character_table(q);
    Complex sum = 0;
    for (std::int64_t j = 1; j < t.count(); ++j) sum += phi(log_L_P_char(P, 1.0, t, j));
    EXPECT_NEAR(std::abs(modulus_average(q, P, 1.0, phi).value - sum / double(q - 2)), 0.0, 1e-13);
  }
}

TEST(ModulusAverage, SinglePrimeApproachesCircleIntegral) {
  const auto P = make_prime_list({2});
  const auto phi = TestFunction::gaussian({0.2, 0.0}, 0.5);
  const Complex exact = circle_integral(phi, 0.5);
  double gap = 1.0;
  for (std::int64_t q : {101, 211, 401, 809, 1009}) gap = std::abs(modulus_average(q, P, 1.0, phi).value - exact);
  EXPECT_LT(gap, 0.05);
}

TEST(ModulusAverage, GapToTorusIntegralShrinks) {
  const auto P = make_prime_list({2, 3});
  const auto phi = TestFunction::gaussian({0.2, 0.0}, 0.5);
  const Complex exact = two_circle_integral(phi, 0.5, 1.0 / 3.0);
  EXPECT_NEAR(std::abs(torus_integral(P, 1.0, phi).value - exact), 0.0, 1e-6);
  std::vector<double> gaps;
  for (std::int64_t q : {101, 211, 401, 809, 1009}) gaps.push_back(std::abs(modulus_average(q, P, 1.0, phi).value - exact));
  int inversions = 0;
  for (std::size_t k = 1; k < gaps.size(); ++k) inversions += gaps[k] > gaps[k - 1];
  EXPECT_LE(inversions, 1);
  EXPECT_LT(gaps.back(), 0.05);
}

TEST(IharaOuterAverage, Examples) {
  const auto P = make_prime_list({2, 3});
  const auto phi = TestFunction::gaussian({0.2, 0.0}, 0.5);
  EXPECT_EQ(ihara_outer_average(3, P, 1.0, phi), modulus_average(3, P, 1.0, phi).value);
  EXPECT_EQ(ihara_outer_average(4, P, 1.0, phi), modulus_average(3, P, 1.0, phi).value);
  for (std::int64_t m : {3, 50, 300}) EXPECT_NEAR(std::abs(ihara_outer_average(m, P, 1.0, TestFunction::one()) - 1.0), 0.0, 1e-13);
  const Complex exact = two_circle_integral(phi, 0.5, 1.0 / 3.0);
  EXPECT_NEAR(std::abs(ihara_outer_average(1000, P, 1.0, phi) - exact), 0.0, 0.05);
  EXPECT_EQ(kind_of([&] { ihara_outer_average(2, P, 1.0, phi); }), ErrorKind::Domain);
}

// ---------------------------------------------------------------------------
// Torus integrals and lattices

TEST(TorusIntegral, OneAndTwoCirclesAgainstQuadrature) {
  const auto phi = TestFunction::gaussian({0.1, -0.1}, 0.3);
  const auto P1 = make_prime_list({3});
  EXPECT_NEAR(std::abs(torus_integral(P1, 0.9, phi).value - circle_integral(phi, std::pow(3.0, -0.9))), 0.0, 1e-9);
  const auto P2 = make_prime_list({2, 5});
  const Complex exact = two_circle_integral(phi, std::pow(2.0, -1.1), std::pow(5.0, -1.1));
  EXPECT_NEAR(std::abs(torus_integral(P2, 1.1, phi).value - exact), 0.0, 1e-5);
}

TEST(TorusIntegral, FourierKernelFactorises) {
  const auto P = first_primes(5);
  const Complex z{1.5, -0.7};
  const auto t = torus_integral(P, 1.2, TestFunction::fourier_kernel(z), {.points = 262147});
  EXPECT_NEAR(std::abs(t.value - char_function_P(P, 1.2, z)), 0.0, 1e-4);
}

TEST(TorusIntegral, MonteCarloBeyondLatticeDimension) {
  const auto P = first_primes(10);
  const auto phi = TestFunction::gaussian({0.0, 0.0}, 0.6);
  TorusIntegralOptions mc{.points = 200000, .max_lattice_dimension = 8, .seed = 5};
  const auto a = torus_integral(P, 1.2, phi, mc);
  EXPECT_EQ(a.method, "monte-carlo");
  EXPECT_EQ(a.value, torus_integral(P, 1.2, phi, mc).value);
  TorusIntegralOptions lat{.points = 262147, .max_lattice_dimension = 10};
  const auto b = torus_integral(P, 1.2, phi, lat);
  EXPECT_EQ(b.method, "korobov-lattice");
  EXPECT_NEAR(std::abs(a.value - b.value), 0.0, 5e-3);
  EXPECT_EQ(torus_integral(P, 1.2, TestFunction::one(), mc).value, Complex(1.0, 0.0));
}

TEST(Korobov, GeneratorAndSearch) {
  const auto lat = korobov_lattice(1021, 4);
  ASSERT_EQ(lat.dimension(), 4u);
  EXPECT_EQ(lat.generator[0], 1u);
  EXPECT_EQ(lat.generator[2], lat.generator[1] * lat.generator[1] % 1021);
  for (std::size_t k = 0; k < 1021; k += 97)
    for (std::size_t j = 0; j < 4; ++j) {
      EXPECT_GE(lat.coordinate(k, j), 0.0);
      EXPECT_LT(lat.coordinate(k, j), 1.0);
    }
  // the searched multiplier is at least as good as the naive a = 2
  KorobovLattice naive{1021, {1, 2, 4, 8}};
  EXPECT_LE(lattice_p2(lat), lattice_p2(naive));
  // in one dimension only the aliases h ∈ nℤ∖{0} survive: P₂ = Σ h^{−2} = π²/(3n²)
  EXPECT_NEAR(lattice_p2(korobov_lattice(1021, 1)), oracle::kPi * oracle::kPi / (3.0 * 1021 * 1021), 1e-14);
  EXPECT_EQ(kind_of([] { korobov_lattice(1, 2); }), ErrorKind::Domain);
}
