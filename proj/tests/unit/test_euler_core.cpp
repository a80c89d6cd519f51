#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <filesystem>
#include <fstream>
#include <random>

#include "mfunc/euler.hpp"
#include "mfunc/error.hpp"
#include "mfunc/modular.hpp"
#include "mfunc/primes.hpp"
#include "mfunc/zeta.hpp"
#include "oracles.hpp"

using namespace mfunc;
using boost::multiprecision::cpp_int;

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

// τ(n), n ≤ N, by multiplying out q∏(1−q^n)^24 one factor at a time.
std::vector<cpp_int> naive_tau(int N) {
  std::vector<cpp_int> c(N, 0);  // coefficients of q^0..q^{N−1}
  c[0] = 1;
  for (int n = 1; n < N; ++n)
    for (int rep = 0; rep < 24; ++rep)
      for (int i = N - 1; i >= n; --i) c[i] -= c[i - n];
  std::vector<cpp_int> tau(N + 1, 0);
  for (int n = 1; n <= N; ++n) tau[n] = c[n - 1];
  return tau;
}

Int128 ipow(Int128 b, int e) {
  Int128 r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

TEST(Primes, SmallLimits) {
  EXPECT_EQ(primes_up_to(10).primes, (std::vector<std::int64_t>{2, 3, 5, 7}));
  EXPECT_EQ(primes_up_to(2).primes, (std::vector<std::int64_t>{2}));
  EXPECT_EQ(primes_up_to(10).limit, 10);
}

TEST(Primes, MillionMatchesTrialDivision) {
  const auto sieve = primes_up_to(1'000'000);
  const auto oracle = oracle::trial_division_primes(1'000'000);
  EXPECT_EQ(sieve.size(), 78498u);
  EXPECT_EQ(sieve.primes, oracle);
}

TEST(Primes, RejectsEmptyRange) {
  EXPECT_EQ(kind_of([] { primes_up_to(1); }), ErrorKind::Domain);
  EXPECT_EQ(kind_of([] { primes_up_to(-5); }), ErrorKind::Domain);
}

TEST(Primes, ExplicitListsAndFactorisation) {
  const auto P = make_prime_list({7, 2, 3, 7});
  EXPECT_EQ(P.primes, (std::vector<std::int64_t>{2, 3, 7}));
  EXPECT_EQ(kind_of([] { make_prime_list({2, 4}); }), ErrorKind::Domain);
  EXPECT_EQ(first_primes(5).primes, (std::vector<std::int64_t>{2, 3, 5, 7, 11}));
  const auto f = factorize(360);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0], (std::pair<std::int64_t, int>{2, 3}));
  EXPECT_EQ(f[2], (std::pair<std::int64_t, int>{5, 1}));
}

TEST(LocalLogTerm, Examples) {
  EXPECT_NEAR(local_log_term(2, 2, 0).real(), std::log(4.0 / 3.0), 1e-15);
  EXPECT_NEAR(local_log_term(2, 2, 0).imag(), 0.0, 1e-15);
  EXPECT_NEAR(local_log_term(2, 2, 0.5).real(), -std::log(5.0 / 4.0), 1e-15);
  const auto q = local_log_term(2, 2, 0.25);
  EXPECT_NEAR(q.real(), -0.5 * std::log(17.0 / 16.0), 1e-15);
  EXPECT_NEAR(q.imag(), -std::atan(-0.25), 1e-15);
  EXPECT_NEAR(q.real(), -0.0303123, 1e-7);
  EXPECT_NEAR(q.imag(), 0.2449787, 1e-7);
}

TEST(LocalLogTerm, RejectsNonPositiveSigma) {
  EXPECT_EQ(kind_of([] { local_log_term(2, 0.0, 0.1); }), ErrorKind::Domain);
  EXPECT_EQ(kind_of([] { local_log_term(3, -1.0, 0.1); }), ErrorKind::Domain);
}

TEST(LocalLogTerm, ConjugateUnderReflectionAndMatchesPrincipalLog) {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> th(0.0, 1.0), sg(0.05, 3.0);
  const auto primes = primes_up_to(1000);
  for (int k = 0; k < 500; ++k) {
    const auto p = primes[gen() % primes.size()];
    const double sigma = sg(gen), theta = th(gen);
    const auto a = local_log_term(p, sigma, theta), b = local_log_term(p, sigma, 1.0 - theta);
    EXPECT_NEAR(a.real(), b.real(), 1e-14);
    EXPECT_NEAR(a.imag(), -b.imag(), 1e-14);
    const auto ref = oracle::neg_log_factor(std::pow(double(p), -sigma), theta);
    EXPECT_NEAR(std::abs(a - ref), 0.0, 1e-14);
  }
}

TEST(EulerLogPartial, Examples) {
  EXPECT_NEAR(std::abs(euler_log_partial({2, 0}, make_prime_list({2})) - std::log(4.0 / 3.0)), 0.0, 1e-15);
  EXPECT_EQ(euler_log_partial({2, 0}, PrimeList{}), Complex(0.0, 0.0));
  const auto v = euler_log_partial({2, 0}, primes_up_to(10'000));
  // Σ_{p>X} −log(1 − p^{−2}) ≤ Σ_{n>X} 2 n^{−2} < 2/X
  EXPECT_NEAR(v.real(), std::log(oracle::kPi * oracle::kPi / 6), 2e-4);
  EXPECT_NEAR(v.real(), 0.49770, 5e-5);
  EXPECT_EQ(kind_of([] { euler_log_partial({0.0, 1.0}, make_prime_list({2})); }), ErrorKind::Domain);
}

TEST(ZetaEval, RealPointsAgainstClosedFormsAndSeries) {
  EXPECT_NEAR(zeta_eval(2, 0).real(), oracle::kPi * oracle::kPi / 6, 1e-10);
  const ZetaOptions fine{.tolerance = 1e-14};
  EXPECT_NEAR(zeta_eval(2, 0, fine).real(), oracle::kPi * oracle::kPi / 6, 1e-13);
  EXPECT_NEAR(zeta_eval(2, 0).real(), 1.6449341, 1e-7);
  // Σ_{n≤N} n^{−3} + N^{−2}/2 − N^{−3}/2 + N^{−4}/4: Euler–Maclaurin tail with error O(N^{−6})
  const int N = 100000;
  const double n = N;
  const double series = oracle::direct_series(3, N) + 1 / (2 * n * n) - 1 / (2 * n * n * n) + 1 / (4 * n * n * n * n);
  EXPECT_NEAR(zeta_eval(3, 0).real(), series, 1e-10);
  EXPECT_NEAR(zeta_eval(3, 0, fine).real(), series, 1e-13);
  EXPECT_NEAR(zeta_eval(3, 0).real(), 1.2020569, 1e-7);
}

TEST(ZetaEval, AgreesWithBorweinOracle) {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> sg(0.5, 3.0), tt(-30.0, 30.0);
  for (int k = 0; k < 60; ++k) {
    const double sigma = sg(gen), t = tt(gen);
    const auto ref = oracle::borwein_zeta({sigma, t});
    EXPECT_LT(std::abs(zeta_eval(sigma, t) - ref), 1e-9) << "s = " << sigma << " + " << t << "i";
  }
}

TEST(ZetaEval, FirstZeroFromBisection) {
  const double gamma1 = oracle::zero_ordinate(14.0, 14.3);
  EXPECT_NEAR(gamma1, 14.134725, 1e-6);
  EXPECT_LT(std::abs(zeta_eval(0.5, 14.134725)), 1e-4);
  EXPECT_LT(std::abs(zeta_eval(0.5, gamma1)), 1e-8);
}

TEST(ZetaEval, Errors) {
  EXPECT_EQ(kind_of([] { zeta_eval(1.0, 0.0); }), ErrorKind::Domain);
  EXPECT_EQ(kind_of([] { zeta_eval(0.0, 3.0); }), ErrorKind::Domain);
  ZetaOptions tight;
  tight.max_terms = 100;
  EXPECT_EQ(kind_of([&] { zeta_eval(0.5, 1e4, tight); }), ErrorKind::Precision);
}

TEST(ZetaEval, BoundIsHonestAtLargeHeight) {
  const auto r = zeta_em({0.5, 5000.0});
  EXPECT_LE(r.error_bound, 1e-10);
  const auto s = zeta_em({0.5, 5000.0}, ZetaOptions{.tolerance = 1e-13});
  EXPECT_LT(std::abs(r.value - s.value), 1e-10);
}

TEST(LogZetaLine, Examples) {
  const auto two = log_zeta_line(2.0, 0.0, 0.0, 0.1);
  ASSERT_EQ(two.values.size(), 1u);
  EXPECT_NEAR(two.values[0].real(), std::log(oracle::kPi * oracle::kPi / 6), 1e-10);
  EXPECT_NEAR(two.values[0].imag(), 0.0, 1e-15);
  EXPECT_NEAR(two.values[0].real(), 0.49770, 1e-5);

  // log ζ(10) ≈ 9.9408e−4 (ζ(10) − 1 ≈ 9.9458e−4 is a different quantity)
  const auto ten = log_zeta_line(10.0, 0.0, 0.0, 0.1);
  EXPECT_NEAR(ten.values[0].real(), std::log(oracle::direct_series(10, 2000)), 1e-10);
  EXPECT_NEAR(ten.values[0].real(), 9.9408e-4, 1e-8);
}

TEST(LogZetaLine, ConjugateSymmetry) {
  const auto line = log_zeta_line(1.3, -40.0, 40.0, 0.05);
  const std::size_t n = line.values.size();
  ASSERT_EQ(n % 2, 1u);
  for (std::size_t k = 0; k < n; ++k) {
    const auto a = line.values[k], b = line.values[n - 1 - k];
    EXPECT_NEAR(a.real(), b.real(), 1e-10);
    EXPECT_NEAR(a.imag(), -b.imag(), 1e-10);
  }
}

TEST(LogZetaLine, ExponentialRecoversZetaAndBranchIsContinuous) {
  const auto line = log_zeta_line(1.2, 0.0, 200.0, 0.1);
  EXPECT_EQ(line.flagged_count, 0u);
  for (std::size_t k = 0; k < line.values.size(); k += 37) {
    const auto z = zeta_eval(1.2, line.t[k]);
    EXPECT_LT(std::abs(std::exp(line.values[k]) - z), 1e-9 * std::max(1.0, std::abs(z)));
  }
  for (std::size_t k = 1; k < line.values.size(); ++k)
    EXPECT_LT(std::abs(line.values[k].imag() - line.values[k - 1].imag()), oracle::kPi / 2);
}

TEST(LogZetaLine, EulerPartialSumsConverge) {
  // |log ζ − f_X| ≤ Σ_{p>X} 2 p^{−σ}; bound the tail with explicit primes to 10^6 and Σ_{n>10^6} 2n^{−σ} beyond.
  const double sigma = 1.5, t = 7.3;
  const auto all = oracle::trial_division_primes(1'000'000);
  const auto value = log_zeta_point(sigma, t);
  for (std::int64_t X : {100, 1000, 10000}) {
    double tail = 2 * std::pow(1e6, 1 - sigma) / (sigma - 1);
    for (auto p : all)
      if (p > X) tail += 2 * std::pow(double(p), -sigma);
    const auto partial = euler_log_partial({sigma, t}, primes_up_to(X));
    EXPECT_LT(std::abs(value - partial), tail) << "X = " << X;
  }
}

TEST(LogZetaLine, ModeGuards) {
  EXPECT_EQ(kind_of([] { log_zeta_line(1.0, 0.0, 1.0, 0.1); }), ErrorKind::Precondition);
  LineOptions exp;
  exp.experimental = true;
  EXPECT_EQ(kind_of([&] { log_zeta_line(0.5, 0.0, 1.0, 0.1, exp); }), ErrorKind::Domain);
  const auto line = log_zeta_line(0.75, 10.0, 40.0, 0.05, exp);
  for (std::size_t k = 0; k < line.values.size(); k += 50) {
    if (line.flagged[k]) continue;
    const auto z = oracle::borwein_zeta({0.75, line.t[k]});
    EXPECT_LT(std::abs(std::exp(line.values[k]) - z), 1e-8);
  }
}

TEST(RamanujanTau, Examples) {
  const auto tau = ramanujan_tau_table(12);
  EXPECT_EQ(static_cast<long long>(tau[1]), 1);
  EXPECT_EQ(static_cast<long long>(tau[2]), -24);
  EXPECT_EQ(static_cast<long long>(tau[3]), 252);
  EXPECT_EQ(static_cast<long long>(tau[6]), static_cast<long long>(tau[2] * tau[3]));
  EXPECT_EQ(to_string(tau[5]), "4830");
  EXPECT_EQ(kind_of([] { ramanujan_tau_table(0); }), ErrorKind::Domain);
}

TEST(RamanujanTau, MatchesNaiveProductExpansion) {
  const int N = 300;
  const auto tau = ramanujan_tau_table(N);
  const auto ref = naive_tau(N);
  for (int n = 1; n <= N; ++n) EXPECT_EQ(to_string(tau[n]), ref[n].str()) << "n = " << n;
}

TEST(RamanujanTau, MultiplicativeAndHecke) {
  const int N = 2000;
  const auto tau = ramanujan_tau_table(N);
  for (int m = 2; m * m <= N; ++m)
    for (int n = m + 1; m * n <= N; ++n)
      if (std::gcd(m, n) == 1) EXPECT_TRUE(tau[m * n] == tau[m] * tau[n]) << m << "·" << n;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43})
    EXPECT_TRUE(tau[p * p] == tau[p] * tau[p] - ipow(p, 11)) << p;
}

TEST(Satake, Examples) {
  const auto a = satake_pair(2.0);
  EXPECT_NEAR(std::abs(a.alpha - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(a.beta - 1.0), 0.0, 1e-15);
  const auto b = satake_pair(0.0);
  EXPECT_NEAR(std::abs(b.alpha - Complex(0, 1)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(b.beta - Complex(0, -1)), 0.0, 1e-15);
  const double lam = -24.0 / std::pow(2.0, 5.5);
  EXPECT_NEAR(lam, -0.5303301, 1e-7);
  const auto c = satake_pair(lam);
  // roots of x² − λx + 1 by the quadratic formula
  const Complex disc = std::sqrt(Complex(lam * lam - 4, 0));
  EXPECT_NEAR(std::abs(c.alpha - (lam + disc) / 2.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(c.alpha * c.beta - 1.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(c.alpha), 1.0, 1e-15);
  EXPECT_EQ(kind_of([] { satake_pair(2.0001); }), ErrorKind::Domain);
}

TEST(Satake, DeligneAndReconstructionUpTo10k) {
  const auto f = delta_form(10'000);
  EXPECT_EQ(f.tabulated_limit(), 10'006);  // next prime is 10007
  EXPECT_EQ(f.eigenvalues.size(), primes_up_to(10'000).size());
  for (const auto& [p, lam] : f.eigenvalues) {
    EXPECT_LE(std::abs(lam), 2.0) << p;
    const auto& s = f.satake_at(p);
    EXPECT_NEAR(std::abs(s.alpha + s.beta - lam), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(s.alpha * s.beta - 1.0), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(s.beta - std::conj(s.alpha)), 0.0, 1e-15);
  }
  EXPECT_EQ(kind_of([&] { f.lambda(10'007); }), ErrorKind::Coverage);
}

TEST(EigenvalueFile, ParsesAndValidates) {
  const auto dir = std::filesystem::temp_directory_path() / "mfunc_eigen_test";
  std::filesystem::create_directories(dir);
  const auto good = dir / "good.txt";
  std::ofstream(good) << "# comment\n2\t-0.5\n3\t1.25\n\n5\t0\n";
  const auto f = load_eigenvalue_file(good, 12, 1);
  EXPECT_EQ(f.eigenvalues.size(), 3u);
  EXPECT_DOUBLE_EQ(f.lambda(3), 1.25);
  EXPECT_EQ(f.tabulated_limit(), 6);

  const auto write_and_load = [&](const std::string& body) {
    const auto path = dir / "bad.txt";
    std::ofstream(path) << body;
    return kind_of([&] { load_eigenvalue_file(path, 12, 1); });
  };
  EXPECT_EQ(write_and_load("2\t0.1\n2\t0.2\n"), ErrorKind::Data);
  EXPECT_EQ(write_and_load("4\t0.1\n"), ErrorKind::Data);
  EXPECT_EQ(write_and_load("2 0.1\n"), ErrorKind::Data);
  EXPECT_EQ(write_and_load("2\t2.5\n"), ErrorKind::Data);
  EXPECT_EQ(write_and_load("2\tabc\n"), ErrorKind::Data);
  EXPECT_EQ(kind_of([&] { load_eigenvalue_file(dir / "missing.txt", 12, 1); }), ErrorKind::Data);
  std::filesystem::remove_all(dir);
}
