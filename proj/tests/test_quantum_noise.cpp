#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "speclimit/error.hpp"
#include "speclimit/model_json.hpp"
#include "speclimit/noise.hpp"
#include "speclimit/stats.hpp"

using namespace speclimit;
using namespace speclimit::noise;
using doctest::Approx;
using oracle::pi;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Config;
}

// Worst-phase energy error bracket on the orbit, by brute-force phase scan.
double scanned_bracket(double energy, double m, double k, double hbar) {
  const double w = std::sqrt(k / m);
  const double p_amp = std::sqrt(2.0 * m * energy);
  const double q_amp = std::sqrt(2.0 * energy / k);
  double best = 0.0;
  constexpr int steps = 10000;
  auto at = [&](double phi) {
    return std::abs(p_amp * std::cos(phi)) * std::sqrt(hbar * w / (2 * m)) +
           k * std::abs(q_amp * std::sin(phi)) * std::sqrt(hbar / (2 * m * w));
  };
  for (int i = 0; i <= steps; ++i) best = std::max(best, at(2.0 * pi * i / steps));
  return std::max(best, at(pi / 4.0));
}

}  // namespace

TEST_CASE("ensemble sampling statistics") {
  const auto ens = sample_ensemble(3.0, 0.25, 100000, 11);
  CHECK(ens.samples.size() == 100000);
  CHECK(ens.true_center == 3.0);
  CHECK(std::abs(stats::mean(ens.samples) - 3.0) < 5.0 * 0.25 / std::sqrt(1e5));
  CHECK(stats::stddev(ens.samples) == Approx(0.25).epsilon(0.01));

  CHECK(sample_ensemble(0, 1, 50, 5).samples == sample_ensemble(0, 1, 50, 5).samples);
  CHECK(sample_ensemble(0, 1, 50, 5).samples != sample_ensemble(0, 1, 50, 6).samples);
  CHECK(sample_ensemble(0, 1, 50, 5, 1).samples != sample_ensemble(0, 1, 50, 5, 2).samples);

  const auto still = sample_ensemble(1.5, 0.0, 10, 1);
  for (double x : still.samples) CHECK(x == 1.5);

  CHECK(kind_of([] { sample_ensemble(0, 1, 1, 0); }) == ErrorKind::InvalidCount);
  CHECK(kind_of([] { sample_ensemble(0, -1, 10, 0); }) == ErrorKind::InvalidSigma);
  CHECK(kind_of([] { sample_ensemble(0, NAN, 10, 0); }) == ErrorKind::InvalidSigma);
}

TEST_CASE("characteristic factor equals the Gaussian average of the phase") {
  // Reference: integral of cos(p xi / hbar) N(xi; 0, dx^2) by Simpson.
  int checked = 0;
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      for (double hbar : {1.0, 0.5, 0.3, 2.0, 7.0, 0.05, 1.3, 3.3, 0.7,
                          1.9}) {
        const double dx = 0.05 + 0.3 * i;
        const double p = -2.0 + 0.45 * j;
        const double reference = oracle::simpson(
            [&](double xi) {
              return std::cos(p * xi / hbar) * std::exp(-0.5 * xi * xi / (dx * dx)) /
                     (dx * std::sqrt(2.0 * pi));
            },
            -14.0 * dx, 14.0 * dx, 4000);
        REQUIRE(std::abs(characteristic_factor(dx, p, hbar) - reference) <= 1e-12);
        ++checked;
      }
    }
  }
  CHECK(checked == 1000);
  CHECK(characteristic_factor(0.0, 5.0, 1.0) == 1.0);
  CHECK(characteristic_factor(1.0, 0.0, 1.0) == 1.0);
}

TEST_CASE("Monte Carlo characteristic estimate") {
  const double hbar = 1.0;
  for (double p : {0.5, 2.0, 4.0}) {
    const auto ens = sample_ensemble(-1.0, 0.3, 20000, 99);
    const auto est = ensemble_characteristic(ens, p, hbar);
    const double exact = characteristic_factor(0.3, p, hbar);
    CAPTURE(p);
    CHECK(std::abs(est.real - exact) <= 3.0 * est.standard_error_real);
    CHECK(std::abs(est.imag) <= 3.0 * est.standard_error_imag);
  }
}

TEST_CASE("state reconstruction") {
  const auto pos = sample_ensemble(1.0, 0.5, 50000, 1, 0);
  const auto mom = sample_ensemble(-2.0, 0.8, 50000, 1, 1);
  const GaussianState st = reconstruct_state(pos, mom, 1.0);
  CHECK(st.r == Approx(1.0).epsilon(0.01));
  CHECK(st.d == Approx(-2.0).epsilon(0.01));
  CHECK(st.delta_x == Approx(0.5).epsilon(0.02));
  CHECK(st.delta_p == Approx(0.8).epsilon(0.02));
  CHECK(st.product_over_hbar == Approx(0.4).epsilon(0.03));
  CHECK(st.sub_sql);
  CHECK(st.position_normalization() == Approx(1.0).epsilon(1e-12));
  CHECK(st.position_density(st.r) == Approx(1.0 / (st.delta_x * std::sqrt(2 * pi))));
  CHECK(st.momentum_density(st.d + st.delta_p) ==
        Approx(std::exp(-0.5) / (st.delta_p * std::sqrt(2 * pi))));

  const auto wide = reconstruct_state(sample_ensemble(0, 1, 5000, 2), sample_ensemble(0, 1, 5000, 3), 1.0);
  CHECK_FALSE(wide.sub_sql);

  const auto frozen = reconstruct_state(sample_ensemble(0, 0, 10, 2), sample_ensemble(0, 1, 10, 3), 1.0);
  CHECK(frozen.delta_x == 0.0);
  CHECK(kind_of([&] { frozen.position_density(0.0); }) == ErrorKind::DegenerateEnsemble);
}

TEST_CASE("standard quantum limit boundary") {
  CHECK(NoiseBudget::make(1.0, 0.5, 1.0).preparable());
  CHECK(NoiseBudget::make(1.0, 0.5 - 1e-13, 1.0).preparable());
  CHECK_FALSE(NoiseBudget::make(1.0, 0.5 - 1e-9, 1.0).preparable());
  CHECK(NoiseBudget::make(2.0, 3.0, 4.0).product_over_hbar == 1.5);
  CHECK(kind_of([] { NoiseBudget::make(-1.0, 1.0, 1.0); }) == ErrorKind::InvalidSigma);
}

TEST_CASE("energy error of a simultaneous measurement") {
  const double m = 2.0;
  const double k = 3.0;
  const double hbar = 0.7;
  const double w = std::sqrt(k / m);
  for (double a : {0.1, 1.0, 4.0}) {
    const auto widths = harmonic_widths(m, k, a, hbar);
    CHECK(widths.delta_p * widths.delta_q == Approx(hbar * a * a / 2.0).epsilon(1e-14));
    // First-order error (|p| dp + k |q| m dq)/m.
    const double q = -0.4;
    const double p = 1.1;
    const double direct = std::abs(p) * widths.delta_p / m + k * std::abs(q) * widths.delta_q;
    CHECK(harmonic_energy_error(q, p, m, k, a, hbar) == Approx(direct).epsilon(1e-14));
  }
  for (double e : {0.01, 1.0, 30.0}) {
    CHECK(max_bracket_on_orbit(e, m, k, hbar) ==
          Approx(scanned_bracket(e, m, k, hbar)).epsilon(1e-9));
    CHECK(max_bracket_on_orbit(e, m, k, hbar) == Approx(std::sqrt(2 * hbar * w * e)).epsilon(1e-12));
  }
}

TEST_CASE("noise product required for resolution") {
  const ModelSpec osc = preset("harmonic");
  CHECK(required_noise_product_for_resolution(osc, 0) == Approx(1.0 / 8.0).epsilon(1e-12));
  CHECK(required_noise_product_for_resolution(osc, 1) == Approx(1.0 / 24.0).epsilon(1e-12));

  // Oracle from the scanned bracket: dp dq / hbar = (hbar w / 2)^2 / (2 B^2).
  const ModelSpec other(HarmonicParams{2.0, 3.0}, unit_system("oscillator"));
  for (const ModelSpec* model : {&osc, &other}) {
    const double m = model->coherent_mass();
    const double k = model->as<HarmonicParams>().stiffness;
    const double w = model->omega();
    for (int n : {0, 1, 2, 7, 100}) {
      const double e = (n + 0.5) * w;
      const double b = scanned_bracket(e, m, k, 1.0);
      const double expected = (0.5 * w) * (0.5 * w) / (2.0 * b * b);
      CHECK(required_noise_product_for_resolution(*model, n) == Approx(expected).epsilon(1e-8));
    }
  }
  for (int n = 0; n <= 1000; ++n) {
    const double product = required_noise_product_for_resolution(osc, n);
    REQUIRE(product < 0.5);
    REQUIRE(product == Approx(1.0 / (16.0 * (n + 0.5))).epsilon(1e-12));
  }
  CHECK(kind_of([] { required_noise_product_for_resolution(preset("box"), 2); }) ==
        ErrorKind::Unsupported);
}

TEST_CASE("ensemble CSV round trip") {
  const auto ens = sample_ensemble(0.125, 2.5, 100, 77, 3);
  const std::string csv = ensemble_csv(ens);
  CHECK(csv.starts_with("# seed=77\n# sigma=2.5\n# center=0.125\noutcome\n"));
  const auto back = ensemble_from_csv(csv);
  CHECK(back.seed == 77);
  CHECK(back.sigma == 2.5);
  REQUIRE(back.samples.size() == ens.samples.size());
  for (std::size_t i = 0; i < ens.samples.size(); ++i) {
    CHECK(back.samples[i] == Approx(ens.samples[i]).epsilon(1e-11));
  }
  CHECK(ensemble_csv(back) == csv);
  CHECK(kind_of([] { ensemble_from_csv("outcome\n1\n2\n"); }) == ErrorKind::Config);
  CHECK(kind_of([] { ensemble_from_csv("# seed=1\n# sigma=1\n# center=0\noutcome\nx\n"); }) ==
        ErrorKind::Config);
}
