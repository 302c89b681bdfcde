#include "speclimit/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "speclimit/error.hpp"

namespace speclimit::stats {

void CompensatedSum::add(double value) {
  const double t = sum_ + value;
  if (std::abs(sum_) >= std::abs(value)) {
    compensation_ += (sum_ - t) + value;
  } else {
    compensation_ += (value - t) + sum_;
  }
  sum_ = t;
}

double mean(std::span<const double> xs) {
  if (xs.empty()) throw Error(ErrorKind::InvalidCount, "mean of an empty sample");
  CompensatedSum s;
  for (double x : xs) s.add(x);
  return s.value() / static_cast<double>(xs.size());
}

double variance(std::span<const double> xs) {
  if (xs.size() < 2) throw Error(ErrorKind::InvalidCount, "variance needs at least 2 values");
  const double m = mean(xs);
  CompensatedSum s;
  for (double x : xs) s.add((x - m) * (x - m));
  return s.value() / static_cast<double>(xs.size() - 1);
}

double stddev(std::span<const double> xs) { return std::sqrt(variance(xs)); }

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

double bayes_error(double mean_a, double sd_a, double mean_b, double sd_b) {
  if (sd_a < 0.0 || sd_b < 0.0) {
    throw Error(ErrorKind::InvalidSigma, "standard deviations must be non-negative");
  }
  if (sd_a == 0.0 && sd_b == 0.0) return mean_a == mean_b ? 0.5 : 0.0;
  if (sd_a == 0.0 || sd_b == 0.0) return 0.0;

  // Make `a` the narrower distribution.
  if (sd_a > sd_b) {
    std::swap(mean_a, mean_b);
    std::swap(sd_a, sd_b);
  }
  const auto cdf = [](double x, double m, double s) { return normal_cdf((x - m) / s); };

  double overlap = 0.0;
  if (sd_b - sd_a <= 1e-12 * sd_b) {
    const double sd = 0.5 * (sd_a + sd_b);
    overlap = 2.0 * normal_cdf(-std::abs(mean_b - mean_a) / (2.0 * sd));
  } else {
    const double va = sd_a * sd_a;
    const double vb = sd_b * sd_b;
    const double qa = 1.0 / va - 1.0 / vb;
    const double qb = -2.0 * (mean_a / va - mean_b / vb);
    const double qc = mean_a * mean_a / va - mean_b * mean_b / vb + 2.0 * std::log(sd_a / sd_b);
    const double disc = std::sqrt(std::max(0.0, qb * qb - 4.0 * qa * qc));
    // Numerically stable quadratic roots.
    const double q = -0.5 * (qb + std::copysign(disc, qb));
    double x1 = q / qa;
    double x2 = q != 0.0 ? qc / q : x1;
    if (x1 > x2) std::swap(x1, x2);
    // Narrow density dominates between the crossings.
    overlap = (cdf(x2, mean_b, sd_b) - cdf(x1, mean_b, sd_b)) +
              (cdf(x1, mean_a, sd_a) + (1.0 - cdf(x2, mean_a, sd_a)));
  }
  return std::clamp(0.5 * overlap, 0.0, 0.5);
}

}  // namespace speclimit::stats
