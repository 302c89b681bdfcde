#include "speclimit/semiclassical.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include "speclimit/error.hpp"

namespace speclimit::semiclassical {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double inf = std::numeric_limits<double>::infinity();

std::string num(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

// E - U(x), measured from the bottom of the well where there is one so that
// shallow orbits near the minimum keep their digits.
double kinetic_energy(const ModelSpec& model, double energy, double x) {
  switch (model.kind()) {
    case ModelKind::Harmonic:
      return energy - 0.5 * model.as<HarmonicParams>().stiffness * x * x;
    case ModelKind::Morse: {
      const auto& p = model.as<MorseParams>();
      const double rise = std::expm1(-p.range * x);
      return (energy + p.depth) - p.depth * rise * rise;
    }
    case ModelKind::NumericPotential: {
      const auto& t = model.potential_table();
      const double floor = t.values()[t.argmin()];
      return (energy - floor) - (t(x) - floor);
    }
    default:
      return energy - potential(model, x);
  }
}

// Position of the well bottom and a length scale for the outward scan.
struct WellGeometry {
  double x_bottom;
  double scan_step;
};

WellGeometry geometry(const ModelSpec& model, double energy) {
  switch (model.kind()) {
    case ModelKind::Harmonic: {
      const double k = model.as<HarmonicParams>().stiffness;
      const double width = std::sqrt(2.0 * std::max(energy, 0.0) / k);
      return {0.0, 1e-3 * (width > 0.0 ? width : 1.0)};
    }
    case ModelKind::Morse:
      return {0.0, 1e-3 / model.as<MorseParams>().range};
    case ModelKind::Hydrogenoid: {
      // No minimum: start from the point where U = 2E < E.
      const auto& p = model.as<HydrogenoidParams>();
      const double k = p.charge_number * p.elementary_charge * p.elementary_charge;
      const double x_ref = k / (2.0 * std::abs(energy));
      return {x_ref, 1e-3 * x_ref};
    }
    case ModelKind::NumericPotential: {
      const auto& table = model.potential_table();
      const auto knots = table.knots();
      const double span = table.x_max() - table.x_min();
      return {knots[table.argmin()], span / (16.0 * static_cast<double>(knots.size()))};
    }
    case ModelKind::Box:
      break;
  }
  return {0.0, 1.0};
}

double refine_root(const ModelSpec& model, double energy, double inside, double outside) {
  auto f = [&](double x) { return -kinetic_energy(model, energy, x); };
  const double f_in = f(inside);
  const double f_out = f(outside);
  if (f_out == 0.0) return outside;
  std::uintmax_t max_iter = 200;
  boost::math::tools::eps_tolerance<double> tol(50);
  auto [lo, hi] = inside < outside
                      ? boost::math::tools::toms748_solve(f, inside, outside, f_in, f_out, tol, max_iter)
                      : boost::math::tools::toms748_solve(f, outside, inside, f_out, f_in, tol, max_iter);
  return 0.5 * (lo + hi);
}

double scan_side(const ModelSpec& model, double energy, double x_start, double step,
                 double direction) {
  double bound = direction > 0 ? inf : -inf;
  if (model.kind() == ModelKind::NumericPotential) {
    const auto& table = model.potential_table();
    bound = direction > 0 ? table.x_max() : table.x_min();
  }
  double inside = x_start;
  if (model.kind() == ModelKind::NumericPotential) {
    // Walk the knots so no barrier between samples is stepped over.
    const auto& table = model.potential_table();
    const auto knots = table.knots();
    const auto values = table.values();
    const auto count = static_cast<std::ptrdiff_t>(knots.size());
    for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(table.argmin()) + (direction > 0 ? 1 : -1);
         i >= 0 && i < count; i += direction > 0 ? 1 : -1) {
      if (values[i] >= energy) return refine_root(model, energy, inside, knots[i]);
      inside = knots[i];
    }
    throw Error(ErrorKind::NoBoundMotion,
                "E=" + num(energy) + " reaches the edge of the potential table at x=" + num(bound));
  }
  double h = step;
  for (int k = 0; k < kMaxScanSteps; ++k) {
    double x = x_start + direction * h;
    bool clamped = false;
    if ((direction > 0 && x >= bound) || (direction < 0 && x <= bound)) {
      x = bound;
      clamped = true;
    }
    if (kinetic_energy(model, energy, x) <= 0.0) return refine_root(model, energy, inside, x);
    if (clamped) {
      throw Error(ErrorKind::NoBoundMotion,
                  "E=" + num(energy) + " reaches the edge of the potential table at x=" + num(x));
    }
    inside = x;
    h *= 2.0;
  }
  throw Error(ErrorKind::RootNotBracketed,
              "turning point scan from x=" + num(x_start) + " with step " + num(step) +
                  " failed after " + std::to_string(kMaxScanSteps) +
                  " expansions; last inside point x=" + num(inside));
}

void check_window(const ModelSpec& model, double energy) {
  const EnergyWindow w = energy_window(model);
  if (!std::isfinite(energy) || !(energy > w.floor) || !(energy < w.ceiling)) {
    throw Error(ErrorKind::NoBoundMotion, "no bound motion at E=" + num(energy) +
                                              " (window " + num(w.floor) + ", " +
                                              num(w.ceiling) + ")");
  }
}

// Reduced kinetic factor h = (E - U(x)) / ((x - x-)(x+ - x)), smooth across
// simple turning points. Close to a soft turning point E - U is pure rounding
// noise, so h is extrapolated linearly from two interior samples instead.
class OrbitShape {
 public:
  OrbitShape(const ModelSpec& model, double energy, const TurningPoints& tp)
      : model_(model),
        energy_(energy),
        x_minus_(tp.x_minus),
        length_(tp.x_plus - tp.x_minus),
        hard_inner_(model.kind() == ModelKind::Hydrogenoid) {}

  double length() const { return length_; }

  // h as a function of sigma = sin^2(theta).
  double h(double sigma) const {
    if (sigma < kEdge && !hard_inner_) return extrapolate(sigma, kEdge, 2.0 * kEdge);
    if (1.0 - sigma < kEdge) return extrapolate(sigma, 1.0 - kEdge, 1.0 - 2.0 * kEdge);
    return direct(sigma);
  }

 private:
  static constexpr double kEdge = 1e-5;

  double direct(double sigma) const {
    const double x = x_minus_ + length_ * sigma;
    const double kinetic = kinetic_energy(model_, energy_, x);
    return std::max(kinetic, 0.0) / (length_ * length_ * sigma * (1.0 - sigma));
  }

  double extrapolate(double sigma, double a, double b) const {
    const double ha = direct(a);
    const double hb = direct(b);
    return std::max(ha + (hb - ha) * (sigma - a) / (b - a), 0.0);
  }

  const ModelSpec& model_;
  double energy_;
  double x_minus_;
  double length_;
  bool hard_inner_;
};

// Integrates g(theta) over [0, pi/2] where x = x- + L sin^2(theta) removes the
// inverse square root behaviour at simple turning points.
template <class Integrand>
double integrate_orbit(Integrand g, const char* what, double energy) {
  double error = 0.0;
  double l1 = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      g, 0.0, pi / 2.0, 18, kQuadratureTolerance, &error, &l1);
  if (!std::isfinite(value) || error > kAcceptedQuadratureError * std::abs(value)) {
    throw Error(ErrorKind::QuadratureFailure,
                std::string(what) + " quadrature at E=" + num(energy) + " achieved error " +
                    num(error) + " on value " + num(value));
  }
  return value;
}

// Scale used for finite differences and bracket expansion.
double energy_scale(const ModelSpec& model, double energy) {
  const EnergyWindow w = energy_window(model);
  double scale = inf;
  if (std::isfinite(w.floor)) scale = std::min(scale, energy - w.floor);
  if (std::isfinite(w.ceiling)) scale = std::min(scale, w.ceiling - energy);
  if (!std::isfinite(scale)) scale = std::abs(energy);
  return scale;
}

}  // namespace

EnergyWindow energy_window(const ModelSpec& model) {
  switch (model.kind()) {
    case ModelKind::Box:
    case ModelKind::Harmonic: return {0.0, inf};
    case ModelKind::Hydrogenoid: return {-inf, 0.0};
    case ModelKind::Morse: return {-model.as<MorseParams>().depth, 0.0};
    case ModelKind::NumericPotential: {
      const auto& t = model.potential_table();
      const auto u = t.values();
      return {u[t.argmin()], std::min(u.front(), u.back())};
    }
  }
  return {0.0, inf};
}

TurningPoints turning_points(const ModelSpec& model, double energy) {
  check_window(model, energy);
  if (model.kind() == ModelKind::Box) {
    return {energy, 0.0, model.as<BoxParams>().width};
  }
  const WellGeometry g = geometry(model, energy);
  TurningPoints tp{energy, 0.0, 0.0};
  if (model.kind() == ModelKind::Hydrogenoid) {
    tp.x_minus = 0.0;
  } else {
    tp.x_minus = scan_side(model, energy, g.x_bottom, g.scan_step, -1.0);
  }
  tp.x_plus = scan_side(model, energy, g.x_bottom, g.scan_step, +1.0);
  if (!(tp.x_minus < tp.x_plus)) {
    throw Error(ErrorKind::RootNotBracketed,
                "degenerate turning points at E=" + num(energy));
  }
  // The open interval must be classically allowed.
  constexpr int probes = 64;
  for (int i = 1; i < probes; ++i) {
    const double x = tp.x_minus + (tp.x_plus - tp.x_minus) * i / probes;
    if (!(kinetic_energy(model, energy, x) > 0.0)) {
      throw Error(ErrorKind::NoBoundMotion,
                  "potential exceeds E=" + num(energy) + " inside the orbit at x=" + num(x) +
                      " (multi-well potentials are not supported)");
    }
  }
  return tp;
}

double action(const ModelSpec& model, double energy) {
  const EnergyWindow w = energy_window(model);
  if (std::isfinite(w.floor) && energy == w.floor) return 0.0;
  const double m = model.coherent_mass();
  if (model.kind() == ModelKind::Box) {
    check_window(model, energy);
    return 2.0 * model.as<BoxParams>().width * std::sqrt(2.0 * m * energy);
  }
  const OrbitShape orbit(model, energy, turning_points(model, energy));
  const double length = orbit.length();
  // sqrt(E - U) dx = 2 L^2 s^2 c^2 sqrt(h) dtheta
  auto g = [&](double theta) {
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    return 2.0 * length * length * s * s * c * c * std::sqrt(orbit.h(s * s));
  };
  return 2.0 * std::sqrt(2.0 * m) * integrate_orbit(g, "action", energy);
}

double action_derivative(const ModelSpec& model, double energy) {
  check_window(model, energy);
  const double h = 1e-4 * energy_scale(model, energy);
  return (action(model, energy + h) - action(model, energy - h)) / (2.0 * h);
}

PeriodEstimate period_of_energy(const ModelSpec& model, double energy) {
  const double m = model.coherent_mass();
  PeriodEstimate out;
  if (model.kind() == ModelKind::Box) {
    check_window(model, energy);
    out.tau = model.as<BoxParams>().width * std::sqrt(2.0 * m / energy);
  } else {
    const OrbitShape orbit(model, energy, turning_points(model, energy));
    // dx / sqrt(E - U) = 2 / sqrt(h) dtheta
    auto g = [&](double theta) {
      const double s = std::sin(theta);
      const double h = orbit.h(s * s);
      return std::isfinite(h) && h > 0.0 ? 2.0 / std::sqrt(h) : 0.0;
    };
    out.tau = std::sqrt(2.0 * m) * integrate_orbit(g, "period", energy);
  }
  out.action_derivative = action_derivative(model, energy);
  out.residual = std::abs(out.tau - out.action_derivative) / out.tau;
  if (!(out.residual <= kPeriodSelfCheckTolerance)) {
    throw Error(ErrorKind::QuadratureFailure,
                "period self-check failed at E=" + num(energy) + ": tau=" + num(out.tau) +
                    " dI/dE=" + num(out.action_derivative) + " residual " + num(out.residual));
  }
  return out;
}

int default_maslov(const ModelSpec& model) {
  switch (model.kind()) {
    case ModelKind::Box:
    case ModelKind::Hydrogenoid: return 0;
    default: return 2;
  }
}

EnergyLevel quantize(const ModelSpec& model, int n) {
  return quantize(model, n, default_maslov(model));
}

EnergyLevel quantize(const ModelSpec& model, int n, int maslov) {
  if (n < 0) throw Error(ErrorKind::OutOfRange, "quantum number must be >= 0");
  if (maslov < 0 || maslov > 3) {
    throw Error(ErrorKind::OutOfRange, "Maslov count must be in [0, 3]");
  }
  const double target = 2.0 * pi * model.hbar() * (n + maslov / 4.0);
  const EnergyWindow w = energy_window(model);
  const auto out_of_range = [&](const std::string& why) {
    return Error(ErrorKind::ActionOutOfRange,
                 "no level n=" + std::to_string(n) + " with Maslov " + std::to_string(maslov) +
                     ": " + why);
  };

  if (target == 0.0) {
    if (std::isfinite(w.floor)) return {n, w.floor, true};
    throw out_of_range("zero action has no orbit");
  }

  auto f = [&](double e) { return action(model, e) - target; };

  double lo = 0.0;
  double hi = 0.0;
  if (std::isfinite(w.floor)) {
    lo = w.floor;
  } else {
    // Expand downward from the ceiling until the action drops below target.
    double step = model.kind() == ModelKind::Hydrogenoid
                      ? std::abs(energy_level(model, 1).energy)
                      : 1.0;
    lo = w.ceiling - step;
    int k = 0;
    while (f(lo) >= 0.0) {
      if (++k > kMaxScanSteps) throw out_of_range("lower energy bracket not found");
      step *= 2.0;
      lo = w.ceiling - step;
    }
  }
  if (std::isfinite(w.ceiling)) {
    const double span = std::isfinite(w.floor) ? w.ceiling - w.floor : std::abs(lo);
    // Orbits grow without bound towards a dissociation ceiling, so approach it
    // in stages and stop at the last energy the quadrature still resolves.
    bool bracketed = false;
    for (double gap : {1e-6, 1e-9, 1e-12}) {
      const double e = w.ceiling - gap * span;
      double value = 0.0;
      try {
        value = f(e);
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::QuadratureFailure) throw;
        break;
      }
      if (value >= 0.0) {
        hi = e;
        bracketed = true;
        break;
      }
      lo = e;
    }
    if (!bracketed) throw out_of_range("target action exceeds the bound-motion range");
  } else {
    double step = model.kind() == ModelKind::Box
                      ? energy_level(model, 1).energy
                      : model.hbar() * model.omega();
    hi = lo + step;
    int k = 0;
    while (f(hi) <= 0.0) {
      if (++k > kMaxScanSteps) throw out_of_range("upper energy bracket not found");
      lo = hi;
      step *= 2.0;
      hi = lo + step;
    }
  }

  const double f_lo = std::isfinite(w.floor) && lo == w.floor ? -target : f(lo);
  const double f_hi = f(hi);
  std::uintmax_t max_iter = 200;
  boost::math::tools::eps_tolerance<double> tol(48);
  auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, f_lo, f_hi, tol, max_iter);
  return {n, 0.5 * (a + b), true};
}

ActionCurve action_curve(const ModelSpec& model, std::span<const double> energies) {
  ActionCurve curve;
  curve.energy.assign(energies.begin(), energies.end());
  std::sort(curve.energy.begin(), curve.energy.end());
  for (double e : curve.energy) {
    curve.action.push_back(action(model, e));
    curve.derivative.push_back(period_of_energy(model, e).tau);
  }
  for (std::size_t i = 1; i < curve.action.size(); ++i) {
    if (!(curve.action[i] > curve.action[i - 1]) || !(curve.derivative[i] > 0.0)) {
      throw Error(ErrorKind::QuadratureFailure,
                  "action curve not strictly increasing near E=" + num(curve.energy[i]));
    }
  }
  return curve;
}

}  // namespace speclimit::semiclassical
