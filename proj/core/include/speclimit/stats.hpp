#pragma once

#include <span>

namespace speclimit::stats {

/// Neumaier compensated summation.
class CompensatedSum {
 public:
  void add(double value);
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

double mean(std::span<const double> xs);

/// Unbiased sample variance (two-pass, compensated). Needs >= 2 values.
double variance(std::span<const double> xs);
double stddev(std::span<const double> xs);

double normal_cdf(double z);

/**
 * Bayes error of an equal-prior choice between N(mean_a, sd_a^2) and
 * N(mean_b, sd_b^2): half the overlap integral of the two densities.
 * Always in [0, 1/2].
 */
double bayes_error(double mean_a, double sd_a, double mean_b, double sd_b);

}  // namespace speclimit::stats
