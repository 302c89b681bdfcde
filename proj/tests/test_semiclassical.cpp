#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "speclimit/error.hpp"
#include "speclimit/model_json.hpp"
#include "speclimit/semiclassical.hpp"

using namespace speclimit;
namespace sc = speclimit::semiclassical;
using oracle::pi;
using oracle::rel_close;
using doctest::Approx;

namespace {

ModelSpec box() { return ModelSpec(BoxParams{1.0, 1.0}, unit_system("natural-box")); }
ModelSpec oscillator() { return ModelSpec(HarmonicParams{1.0, 1.0}, unit_system("oscillator")); }
ModelSpec hydrogen() { return ModelSpec(HydrogenoidParams{1.0, 1, 1.0}, unit_system("atomic")); }

// Harmonic well k = 1 sampled on a table, shifted by `offset`.
ModelSpec sampled_harmonic(double offset, int samples = 801) {
  NumericPotentialParams p;
  p.mass = 1.0;
  for (int i = 0; i < samples; ++i) {
    const double x = -4.0 + 8.0 * i / (samples - 1);
    p.x.push_back(x);
    p.u.push_back(0.5 * x * x + offset);
  }
  return ModelSpec(p, unit_system("oscillator"));
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Config;
}

std::vector<double> log_spaced(double lo, double hi, int count) {
  std::vector<double> out;
  for (int i = 0; i < count; ++i) {
    out.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1)));
  }
  return out;
}

}  // namespace

TEST_CASE("turning points") {
  const auto tp = sc::turning_points(oscillator(), 0.5);
  CHECK(tp.x_minus == Approx(-1.0).epsilon(1e-12));
  CHECK(tp.x_plus == Approx(1.0).epsilon(1e-12));

  const auto wall = sc::turning_points(box(), 3.0);
  CHECK(wall.x_minus == 0.0);
  CHECK(wall.x_plus == 1.0);

  // Morse: exp(-alpha x) = 1 -+ sqrt(1 - |E|/D).
  const ModelSpec morse = preset("h2-morse");
  const double depth = 4.7446;
  const double alpha = 1.9426;
  for (double e : {-4.5, -2.0, -0.3, -1e-3}) {
    const double root = std::sqrt(1.0 - std::abs(e) / depth);
    const auto t = sc::turning_points(morse, e);
    CHECK(t.x_minus == Approx(-std::log(1.0 + root) / alpha).epsilon(1e-12));
    CHECK(t.x_plus == Approx(-std::log(1.0 - root) / alpha).epsilon(1e-12));
  }

  // Bottom-of-well limit: both points collapse onto x = 0.
  double previous_width = 1e9;
  for (double gap : {1e-2, 1e-4, 1e-6, 1e-8}) {
    const auto t = sc::turning_points(morse, -depth + gap);
    const double width = t.x_plus - t.x_minus;
    CHECK(width < previous_width);
    CHECK(std::abs(t.x_minus) < 2.0 * std::sqrt(gap));
    CHECK(std::abs(t.x_plus) < 2.0 * std::sqrt(gap));
    previous_width = width;
  }
  CHECK(previous_width < 1e-3);

  // Coulomb: inner point is the origin, outer point k/|E|.
  const auto kepler = sc::turning_points(hydrogen(), -0.5);
  CHECK(kepler.x_minus == 0.0);
  CHECK(kepler.x_plus == Approx(2.0).epsilon(1e-12));
}

TEST_CASE("turning point errors") {
  CHECK(kind_of([] { sc::turning_points(oscillator(), 0.0); }) == ErrorKind::NoBoundMotion);
  CHECK(kind_of([] { sc::turning_points(oscillator(), -1.0); }) == ErrorKind::NoBoundMotion);
  CHECK(kind_of([] { sc::turning_points(preset("h2-morse"), 0.1); }) == ErrorKind::NoBoundMotion);
  CHECK(kind_of([] { sc::turning_points(preset("h2-morse"), -5.0); }) == ErrorKind::NoBoundMotion);
  CHECK(kind_of([] { sc::turning_points(hydrogen(), 0.0); }) == ErrorKind::NoBoundMotion);
  // Above the lower table edge there is no confinement.
  const ModelSpec table(NumericPotentialParams{1.0, {-2.0, -1.0, 0.0, 1.0, 2.0}, {3.0, 1.0, 0.0, 1.0, 5.0}},
                        unit_system("natural-box"));
  CHECK(kind_of([&] { sc::turning_points(table, 3.5); }) == ErrorKind::NoBoundMotion);
  CHECK_NOTHROW(sc::turning_points(table, 2.5));
  // Below the barrier the orbit stays in the deeper well.
  const ModelSpec double_well(
      NumericPotentialParams{1.0, {-3, -2, -1, 0, 1, 2, 3}, {9, 0, 1.5, 2, 1, -1, 9}},
      unit_system("natural-box"));
  const auto local = sc::turning_points(double_well, 1.8);
  CHECK(local.x_minus > 0.0);
  CHECK(local.x_plus < 3.0);
}

TEST_CASE("action integral") {
  CHECK(sc::action(oscillator(), 1.0) == Approx(2.0 * pi).epsilon(1e-12));
  CHECK(sc::action(box(), pi * pi / 2.0) == Approx(2.0 * pi).epsilon(1e-14));
  CHECK(sc::action(oscillator(), 0.0) == 0.0);
  CHECK(sc::action(preset("h2-morse"), -4.7446) == 0.0);

  const ModelSpec morse = preset("h2-morse");
  const double mass = morse.coherent_mass();
  for (double e : {-4.7, -3.0, -1.0, -0.1, -1e-4}) {
    CAPTURE(e);
    CHECK(rel_close(sc::action(morse, e), oracle::morse_action(mass, 4.7446, 1.9426, e), 1e-10));
  }
  for (double e : {-50.0, -0.5, -1e-3}) {
    CAPTURE(e);
    CHECK(rel_close(sc::action(hydrogen(), e), oracle::kepler_action(1.0, 1.0, e), 1e-10));
  }
  for (double e : {1e-3, 0.7, 42.0}) {
    CHECK(rel_close(sc::action(oscillator(), e), 2.0 * pi * e, 1e-12));
  }
}

TEST_CASE("action on a sampled potential matches a Simpson oracle") {
  const ModelSpec table = sampled_harmonic(0.0, 41);
  const double e = 1.7;
  const auto tp = sc::turning_points(table, e);
  // Simpson in the sin^2 variable, evaluated independently of the library quadrature.
  const double length = tp.x_plus - tp.x_minus;
  const auto& u = table.potential_table();
  auto integrand = [&](double theta) {
    const double s = std::sin(theta);
    const double x = tp.x_minus + length * s * s;
    const double k = e - u(x);
    return k > 0 ? std::sqrt(2.0 * k) * 2.0 * length * s * std::cos(theta) : 0.0;
  };
  const double reference = 2.0 * oracle::simpson(integrand, 0.0, pi / 2.0, 200000);
  CHECK(rel_close(sc::action(table, e), reference, 1e-8));
  // And the interpolated well is close to the exact harmonic one.
  CHECK(rel_close(sc::action(table, e), 2.0 * pi * e, 1e-3));
}

TEST_CASE("quantize") {
  CHECK(sc::quantize(oscillator(), 3, 2).energy == Approx(3.5).epsilon(1e-6));
  CHECK(sc::quantize(box(), 2, 0).energy == Approx(2.0 * pi * pi).epsilon(1e-6));
  CHECK(sc::default_maslov(box()) == 0);
  CHECK(sc::default_maslov(oscillator()) == 2);
  CHECK(sc::default_maslov(hydrogen()) == 0);
  CHECK(sc::default_maslov(preset("h2-morse")) == 2);

  const ModelSpec morse = preset("h2-morse");
  for (int n = 0; n <= *morse.n_max(); ++n) {
    CAPTURE(n);
    CHECK(rel_close(sc::quantize(morse, n, 2).energy, energy_level(morse, n).energy, 1e-6));
  }
  for (int n = 0; n <= 20; ++n) {
    CHECK(rel_close(sc::quantize(oscillator(), n).energy, n + 0.5, 1e-6));
  }
  for (int n = 1; n <= 20; ++n) {
    CHECK(rel_close(sc::quantize(box(), n).energy, n * n * pi * pi / 2.0, 1e-6));
    CHECK(rel_close(sc::quantize(hydrogen(), n).energy, -0.5 / (n * n), 1e-6));
  }
  // Bare rule on the oscillator drops the zero-point energy.
  CHECK(sc::quantize(oscillator(), 3, 0).energy == Approx(3.0).epsilon(1e-8));
  CHECK(sc::quantize(oscillator(), 0, 0).energy == 0.0);

  CHECK(kind_of([&] { sc::quantize(morse, 17, 2); }) == ErrorKind::ActionOutOfRange);
  CHECK(kind_of([] { sc::quantize(hydrogen(), 0, 0); }) == ErrorKind::ActionOutOfRange);
  CHECK(kind_of([] { sc::quantize(box(), -1, 0); }) == ErrorKind::OutOfRange);
  CHECK(kind_of([] { sc::quantize(box(), 1, 4); }) == ErrorKind::OutOfRange);
}

TEST_CASE("period of energy") {
  for (double e : {1e-4, 1.0, 250.0}) {
    CHECK(sc::period_of_energy(oscillator(), e).tau == Approx(2.0 * pi).epsilon(1e-8));
  }
  CHECK(sc::period_of_energy(box(), pi * pi / 2.0).tau == Approx(2.0 / pi).epsilon(1e-8));
  CHECK(sc::period_of_energy(hydrogen(), -0.5).tau == Approx(2.0 * pi).epsilon(1e-6));

  const ModelSpec morse = preset("h2-morse");
  for (double e : {-4.5, -1.0, -0.01}) {
    const double expected = 2.0 * pi / 1.9426 * std::sqrt(morse.coherent_mass() / (2.0 * -e));
    CHECK(rel_close(sc::period_of_energy(morse, e).tau, expected, 1e-8));
  }
  const auto est = sc::period_of_energy(morse, -2.0);
  CHECK(est.residual <= 1e-6);
  CHECK(rel_close(est.tau, est.action_derivative, 1e-6));
}

TEST_CASE("dI/dE equals the period at 50 log-spaced energies") {
  const ModelSpec morse = preset("h2-morse");
  const ModelSpec table = sampled_harmonic(0.0);
  struct Case {
    const char* name;
    ModelSpec model;
    std::vector<double> energies;
  };
  std::vector<Case> cases;
  cases.push_back({"harmonic", oscillator(), log_spaced(1e-3, 1e3, 50)});
  cases.push_back({"box", box(), log_spaced(1e-3, 1e4, 50)});
  std::vector<double> morse_e;
  for (double g : log_spaced(1e-4, 0.999, 50)) morse_e.push_back(-4.7446 + 4.7446 * g);
  cases.push_back({"morse", morse, morse_e});
  std::vector<double> coulomb_e;
  for (double g : log_spaced(1e-3, 1e2, 50)) coulomb_e.push_back(-g);
  cases.push_back({"hydrogenoid", hydrogen(), coulomb_e});
  cases.push_back({"numeric", table, log_spaced(1e-2, 7.5, 50)});

  for (const auto& c : cases) {
    for (double e : c.energies) {
      CAPTURE(c.name);
      CAPTURE(e);
      const double tau = sc::period_of_energy(c.model, e).tau;
      const double didE = sc::action_derivative(c.model, e);
      CHECK(rel_close(tau, didE, 1e-6));
    }
    const auto curve = sc::action_curve(c.model, c.energies);
    for (std::size_t i = 1; i < curve.action.size(); ++i) {
      CHECK(curve.action[i] > curve.action[i - 1]);
      CHECK(curve.derivative[i] > 0.0);
    }
  }
}

TEST_CASE("gauge invariance under a constant shift") {
  const double shift = 3.7;
  const ModelSpec base = sampled_harmonic(0.0);
  const ModelSpec moved = sampled_harmonic(shift);
  for (double e : {0.05, 0.8, 3.0, 7.0}) {
    CAPTURE(e);
    CHECK(rel_close(sc::action(base, e), sc::action(moved, e + shift), 1e-10));
    CHECK(rel_close(sc::period_of_energy(base, e).tau,
                    sc::period_of_energy(moved, e + shift).tau, 1e-10));
  }
}

TEST_CASE("semiclassical levels of a sampled well") {
  const ModelSpec table = sampled_harmonic(0.0);
  for (int n = 0; n < 6; ++n) {
    CHECK(rel_close(sc::quantize(table, n).energy, n + 0.5, 1e-4));
  }
  // The table tops out at U = 8, so high levels run out.
  CHECK(kind_of([&] { sc::quantize(table, 9); }) == ErrorKind::ActionOutOfRange);
}
