#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "speclimit/error.hpp"
#include "speclimit/rng.hpp"
#include "speclimit/stats.hpp"

using namespace speclimit;
using doctest::Approx;

TEST_CASE("splitmix64 reference sequence") {
  std::uint64_t state = 0;
  CHECK(random::splitmix64(state) == 0xe220a8397b1dcdafULL);
  CHECK(random::splitmix64(state) == 0x6e789e6aa1b965f4ULL);
  CHECK(random::splitmix64(state) == 0x06c45d188009454fULL);
}

TEST_CASE("generator determinism and streams") {
  random::Generator a(42);
  random::Generator b(42);
  random::Generator c(42, 1);
  random::Generator d(43);
  int same_c = 0;
  int same_d = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto x = a();
    REQUIRE(x == b());
    same_c += x == c() ? 1 : 0;
    same_d += x == d() ? 1 : 0;
  }
  CHECK(same_c == 0);
  CHECK(same_d == 0);
}

TEST_CASE("uniform and normal moments") {
  random::Generator gen(2024, 7);
  constexpr int count = 200000;
  std::vector<double> u(count);
  std::vector<double> z(count);
  for (int i = 0; i < count; ++i) {
    u[i] = gen.uniform();
    REQUIRE(u[i] >= 0.0);
    REQUIRE(u[i] < 1.0);
  }
  for (int i = 0; i < count; ++i) z[i] = gen.normal();
  const double se = 1.0 / std::sqrt(static_cast<double>(count));
  CHECK(std::abs(stats::mean(u) - 0.5) < 5.0 * se * std::sqrt(1.0 / 12.0));
  CHECK(std::abs(stats::variance(u) - 1.0 / 12.0) < 0.01 / 12.0);
  CHECK(std::abs(stats::mean(z)) < 5.0 * se);
  CHECK(std::abs(stats::variance(z) - 1.0) < 0.01);
  // Tail fraction beyond 2 sigma, 2 * Phi(-2) = 0.0455.
  const auto tail = std::count_if(z.begin(), z.end(), [](double v) { return std::abs(v) > 2.0; });
  CHECK(static_cast<double>(tail) / count == Approx(0.0455).epsilon(0.05));
}

TEST_CASE("compensated statistics") {
  stats::CompensatedSum s;
  for (double v : {1e16, 1.0, -1e16}) s.add(v);
  CHECK(s.value() == 1.0);

  const std::vector<double> xs{2, 4, 4, 4, 5, 5, 7, 9};
  CHECK(stats::mean(xs) == 5.0);
  CHECK(stats::variance(xs) == Approx(32.0 / 7.0).epsilon(1e-15));
  // Large offset does not spoil the variance.
  std::vector<double> shifted;
  for (double x : xs) shifted.push_back(x + 1e9);
  CHECK(stats::variance(shifted) == Approx(32.0 / 7.0).epsilon(1e-9));

  CHECK_THROWS_AS(stats::mean(std::vector<double>{}), Error);
  CHECK_THROWS_AS(stats::variance(std::vector<double>{1.0}), Error);
  CHECK(stats::normal_cdf(0.0) == 0.5);
  CHECK(stats::normal_cdf(1.959963984540054) == Approx(0.975).epsilon(1e-14));
}

TEST_CASE("bayes error against a numerical overlap") {
  auto oracle_error = [](double ma, double sa, double mb, double sb) {
    auto pdf = [](double x, double m, double s) {
      const double z = (x - m) / s;
      return std::exp(-0.5 * z * z) / (s * std::sqrt(2.0 * oracle::pi));
    };
    const double lo = std::min(ma - 12 * sa, mb - 12 * sb);
    const double hi = std::max(ma + 12 * sa, mb + 12 * sb);
    return 0.5 * oracle::simpson(
                     [&](double x) { return std::min(pdf(x, ma, sa), pdf(x, mb, sb)); }, lo, hi,
                     400000);
  };
  struct Case {
    double ma, sa, mb, sb;
  };
  for (const Case c : {Case{0, 1, 2, 1}, Case{0, 1, 0.5, 3}, Case{-1, 0.2, 1, 0.7},
                       Case{5, 2, 5, 1}, Case{0, 1, 10, 1.5}}) {
    CAPTURE(c.ma);
    CAPTURE(c.sb);
    CHECK(stats::bayes_error(c.ma, c.sa, c.mb, c.sb) ==
          Approx(oracle_error(c.ma, c.sa, c.mb, c.sb)).epsilon(1e-6).scale(1e-9));
  }
  // Equal widths: Phi(-d/2).
  CHECK(stats::bayes_error(0, 1, 2, 1) == Approx(stats::normal_cdf(-1.0)).epsilon(1e-14));
  CHECK(stats::bayes_error(3, 1, 3, 1) == Approx(0.5));
  CHECK(stats::bayes_error(0, 0, 1, 0) == 0.0);
  CHECK(stats::bayes_error(1, 0, 1, 0) == 0.5);
  CHECK_THROWS_AS(stats::bayes_error(0, -1, 0, 1), Error);
}
