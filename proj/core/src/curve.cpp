#include "mfunc/curve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mfunc/error.hpp"
#include "mfunc/euler.hpp"

namespace mfunc {

Complex CurveMeasure::mean() const noexcept {
  Complex s{0.0, 0.0};
  for (const auto& w : points) s += w;
  return points.empty() ? s : s / double(points.size());
}

double CurveMeasure::max_modulus() const noexcept {
  double m = 0.0;
  for (const auto& w : points) m = std::max(m, std::abs(w));
  return m;
}

CurveMap prime_curve_map(std::int64_t p, double sigma) {
  const double r = std::pow(static_cast<double>(p), -sigma);
  require(sigma > 0.0 && p >= 2, ErrorKind::Domain, "prime_curve_map needs p >= 2 and sigma > 0");
  return [r](double theta) { return neg_log_one_minus(r, kTwoPi * theta); };
}

CurveMeasure prime_curve_measure(std::int64_t p, double sigma, std::size_t n_samples) {
  require(sigma > 0.5, ErrorKind::Domain, "prime_curve_measure needs sigma > 1/2, got " + std::to_string(sigma));
  require(n_samples >= 256, ErrorKind::Domain, "prime_curve_measure needs at least 256 samples");
  CurveMeasure c;
  c.p = p;
  c.sigma = sigma;
  c.points.resize(n_samples);
  for (std::size_t k = 0; k < n_samples; ++k)
    c.points[k] = local_log_term(p, sigma, double(k) / double(n_samples));
  return c;
}

}  // namespace mfunc
