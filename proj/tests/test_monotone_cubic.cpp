#include <cmath>
#include <vector>

#include "doctest.h"
#include "speclimit/error.hpp"
#include "speclimit/monotone_cubic.hpp"
#include "speclimit/rng.hpp"

using speclimit::Error;
using speclimit::ErrorKind;
using speclimit::MonotoneCubic;
using doctest::Approx;

TEST_CASE("interpolates the samples") {
  const MonotoneCubic f({-2.0, -1.0, 0.0, 1.5, 3.0}, {4.0, 1.0, 0.0, 2.25, 9.0});
  CHECK(f(-2.0) == 4.0);
  CHECK(f(-1.0) == 1.0);
  CHECK(f(0.0) == 0.0);
  CHECK(f(1.5) == 2.25);
  CHECK(f(3.0) == 9.0);
  CHECK(f.argmin() == 2);
}

TEST_CASE("reproduces linear data exactly") {
  const MonotoneCubic f({0.0, 1.0, 2.5, 4.0}, {1.0, 3.0, 6.0, 9.0});
  for (double x = 0.0; x <= 4.0; x += 0.125) {
    CHECK(f(x) == Approx(1.0 + 2.0 * x).epsilon(1e-14));
    CHECK(f.derivative(x) == Approx(2.0).epsilon(1e-12));
  }
}

TEST_CASE("queries outside the table are errors") {
  const MonotoneCubic f({0.0, 1.0, 2.0}, {1.0, 0.0, 1.0});
  try {
    (void)f(2.0001);
    FAIL("expected OutOfRange");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OutOfRange);
  }
  CHECK_THROWS_AS((void)f(-1e-9), Error);
  CHECK_THROWS_AS((void)f(std::nan("")), Error);
}

TEST_CASE("rejects malformed tables") {
  CHECK_THROWS_AS(MonotoneCubic({0.0, 1.0}, {0.0, 1.0}), Error);
  CHECK_THROWS_AS(MonotoneCubic({0.0, 1.0, 1.0}, {0.0, 1.0, 2.0}), Error);
  CHECK_THROWS_AS(MonotoneCubic({0.0, 2.0, 1.0}, {0.0, 1.0, 2.0}), Error);
  CHECK_THROWS_AS(MonotoneCubic({0.0, 1.0, 2.0}, {0.0, 1.0}), Error);
}

TEST_CASE("property: monotone data stays monotone and the minimum is a knot") {
  speclimit::random::Generator gen(2024);
  for (int trial = 0; trial < 200; ++trial) {
    // Random single-well table: decreasing then increasing samples.
    const int left = 2 + static_cast<int>(gen.uniform() * 6);
    const int right = 2 + static_cast<int>(gen.uniform() * 6);
    std::vector<double> x;
    std::vector<double> y;
    double xc = -1.0 - 3.0 * gen.uniform();
    double yc = 1.0 + 10.0 * gen.uniform();
    for (int i = 0; i < left; ++i) {
      x.push_back(xc);
      y.push_back(yc);
      xc += 0.05 + gen.uniform();
      yc -= 0.01 + 5.0 * gen.uniform() * gen.uniform();
    }
    const double y_min = yc;
    for (int i = 0; i <= right; ++i) {
      x.push_back(xc);
      y.push_back(yc);
      xc += 0.05 + gen.uniform();
      yc += 0.01 + 5.0 * gen.uniform() * gen.uniform();
    }
    const MonotoneCubic f(x, y);
    REQUIRE(f.argmin() == static_cast<std::size_t>(left));
    for (std::size_t k = 0; k + 1 < x.size(); ++k) {
      const bool rising = y[k + 1] > y[k];
      double prev = f(x[k]);
      for (int j = 1; j <= 40; ++j) {
        const double xs = j == 40 ? x[k + 1] : x[k] + (x[k + 1] - x[k]) * j / 40.0;
        const double v = f(xs);
        if (rising) {
          REQUIRE(v >= prev - 1e-12);
        } else {
          REQUIRE(v <= prev + 1e-12);
        }
        REQUIRE(v >= y_min - 1e-12);
        prev = v;
      }
    }
  }
}
