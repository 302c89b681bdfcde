#include "speclimit/models.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "speclimit/error.hpp"

namespace speclimit {

namespace {

constexpr double pi = std::numbers::pi;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw Error(ErrorKind::InvalidModel,
                std::string(what) + " must be finite and strictly positive");
  }
}

void check_level(const ModelSpec& model, int n) {
  if (n < model.n_min()) {
    throw Error(ErrorKind::OutOfRange, "quantum number n=" + std::to_string(n) +
                                           " below minimum " + std::to_string(model.n_min()) +
                                           " for " + std::string(to_string(model.kind())));
  }
  if (auto top = model.n_max(); top && n > *top) {
    throw Error(ErrorKind::OutOfRange, "quantum number n=" + std::to_string(n) +
                                           " above the last bound level n_max=" +
                                           std::to_string(*top));
  }
  if (model.kind() == ModelKind::NumericPotential) {
    throw Error(ErrorKind::Unsupported,
                "numeric potentials have no closed-form levels; use the semiclassical engine");
  }
}

// Z^2 e^4 in coherent units.
double coulomb_strength_sq(const HydrogenoidParams& p) {
  const double ze2 = p.charge_number * p.elementary_charge * p.elementary_charge;
  return ze2 * ze2;
}

}  // namespace

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::Box: return "box";
    case ModelKind::Harmonic: return "harmonic";
    case ModelKind::Hydrogenoid: return "hydrogenoid";
    case ModelKind::Morse: return "morse";
    case ModelKind::NumericPotential: return "numeric";
  }
  return "unknown";
}

ModelSpec::ModelSpec(ModelParams params, UnitSystem units)
    : params_(std::move(params)), units_(std::move(units)) {
  require_positive(units_.hbar, "hbar");
  require_positive(units_.mass_factor, "unit mass factor");
  std::visit(overloaded{
                 [](const BoxParams& p) {
                   require_positive(p.mass, "box mass");
                   require_positive(p.width, "box width");
                 },
                 [](const HarmonicParams& p) {
                   require_positive(p.mass, "harmonic mass");
                   require_positive(p.stiffness, "harmonic stiffness");
                 },
                 [](const HydrogenoidParams& p) {
                   require_positive(p.reduced_mass, "reduced mass");
                   require_positive(p.elementary_charge, "elementary charge");
                   if (p.charge_number < 1) {
                     throw Error(ErrorKind::InvalidModel, "charge number Z must be >= 1");
                   }
                 },
                 [](const MorseParams& p) {
                   require_positive(p.mass, "Morse mass");
                   require_positive(p.depth, "Morse depth");
                   require_positive(p.range, "Morse range");
                 },
                 [this](const NumericPotentialParams& p) {
                   require_positive(p.mass, "numeric potential mass");
                   table_ = std::make_shared<const MonotoneCubic>(p.x, p.u);
                   const std::size_t k = table_->argmin();
                   if (k == 0 || k + 1 == p.x.size()) {
                     throw Error(ErrorKind::InvalidModel,
                                 "numeric potential must attain an interior minimum");
                   }
                 },
             },
             params_);
  if (kind() == ModelKind::Morse && !(zeta() > 1.0)) {
    throw Error(ErrorKind::InvalidModel,
                "Morse well too shallow: zeta=" + std::to_string(zeta()) + " must exceed 1");
  }
}

ModelKind ModelSpec::kind() const { return static_cast<ModelKind>(params_.index()); }

double ModelSpec::coherent_mass() const {
  const double m = std::visit(overloaded{
                                  [](const BoxParams& p) { return p.mass; },
                                  [](const HarmonicParams& p) { return p.mass; },
                                  [](const HydrogenoidParams& p) { return p.reduced_mass; },
                                  [](const MorseParams& p) { return p.mass; },
                                  [](const NumericPotentialParams& p) { return p.mass; },
                              },
                              params_);
  return m * units_.mass_factor;
}

double ModelSpec::omega() const {
  if (const auto* h = std::get_if<HarmonicParams>(&params_)) {
    return std::sqrt(h->stiffness / coherent_mass());
  }
  if (const auto* m = std::get_if<MorseParams>(&params_)) {
    return m->range * std::sqrt(2.0 * m->depth / coherent_mass());
  }
  throw Error(ErrorKind::Unsupported, "omega is defined for harmonic and Morse models only");
}

double ModelSpec::zeta() const {
  const auto& m = std::get<MorseParams>(params_);
  return 4.0 * m.depth / (hbar() * omega());
}

int ModelSpec::n_min() const {
  switch (kind()) {
    case ModelKind::Box:
    case ModelKind::Hydrogenoid: return 1;
    default: return 0;
  }
}

std::optional<int> ModelSpec::n_max() const {
  if (kind() != ModelKind::Morse) return std::nullopt;
  // n + 1/2 < zeta/2, strict.
  return static_cast<int>(std::ceil(zeta() / 2.0 - 0.5)) - 1;
}

const MonotoneCubic& ModelSpec::potential_table() const {
  if (!table_) throw Error(ErrorKind::Unsupported, "model has no potential table");
  return *table_;
}

EnergyLevel energy_level(const ModelSpec& model, int n) {
  check_level(model, n);
  const double hbar = model.hbar();
  const double m = model.coherent_mass();
  double e = 0.0;
  switch (model.kind()) {
    case ModelKind::Box: {
      const double a = model.as<BoxParams>().width;
      e = hbar * hbar * n * n * pi * pi / (2.0 * m * a * a);
      break;
    }
    case ModelKind::Harmonic:
      e = hbar * model.omega() * (n + 0.5);
      break;
    case ModelKind::Hydrogenoid:
      e = -m * coulomb_strength_sq(model.as<HydrogenoidParams>()) /
          (2.0 * hbar * hbar * n * n);
      break;
    case ModelKind::Morse: {
      const double x = n + 0.5;
      e = -model.as<MorseParams>().depth + hbar * model.omega() * (x - x * x / model.zeta());
      break;
    }
    case ModelKind::NumericPotential:
      break;
  }
  return {n, e, true};
}

PeriodPoint classical_period(const ModelSpec& model, int n) {
  check_level(model, n);
  const double hbar = model.hbar();
  const double m = model.coherent_mass();
  double tau = 0.0;
  switch (model.kind()) {
    case ModelKind::Box: {
      const double a = model.as<BoxParams>().width;
      tau = 2.0 * a * a * m / (hbar * n * pi);
      break;
    }
    case ModelKind::Harmonic:
      tau = 2.0 * pi / model.omega();
      break;
    case ModelKind::Hydrogenoid:
      tau = 2.0 * pi * hbar * hbar * hbar * n * n * n /
            (m * coulomb_strength_sq(model.as<HydrogenoidParams>()));
      break;
    case ModelKind::Morse: {
      const double alpha = model.as<MorseParams>().range;
      const double e = energy_level(model, n).energy;
      tau = 2.0 * pi * std::sqrt(m / (2.0 * std::abs(e) * alpha * alpha));
      break;
    }
    case ModelKind::NumericPotential:
      break;
  }
  return {n, tau};
}

std::vector<EnergyLevel> bound_levels(const ModelSpec& model, int n_limit) {
  if (n_limit < 1) {
    throw Error(ErrorKind::OutOfRange, "n_limit must be >= 1");
  }
  std::vector<EnergyLevel> levels;
  int last = model.n_min() + n_limit - 1;
  if (auto top = model.n_max()) last = std::min(last, *top);
  levels.reserve(static_cast<std::size_t>(std::max(0, last - model.n_min() + 1)));
  for (int n = model.n_min(); n <= last; ++n) {
    levels.push_back(energy_level(model, n));
  }
  return levels;
}

ModelSpec convert_units(const ModelSpec& model, const UnitSystem& target) {
  const UnitSystem& from = model.units();
  const double mass = from.mass_si / target.mass_si;
  const double length = from.length_si / target.length_si;
  const double energy = from.energy_si / target.energy_si;
  const double charge = from.charge_si() / target.charge_si();
  ModelParams converted = std::visit(
      overloaded{
          [&](const BoxParams& p) -> ModelParams {
            return BoxParams{p.mass * mass, p.width * length};
          },
          [&](const HarmonicParams& p) -> ModelParams {
            return HarmonicParams{p.mass * mass, p.stiffness * energy / (length * length)};
          },
          [&](const HydrogenoidParams& p) -> ModelParams {
            return HydrogenoidParams{p.reduced_mass * mass, p.charge_number,
                                     p.elementary_charge * charge};
          },
          [&](const MorseParams& p) -> ModelParams {
            return MorseParams{p.mass * mass, p.depth * energy, p.range / length};
          },
          [&](const NumericPotentialParams& p) -> ModelParams {
            NumericPotentialParams out{p.mass * mass, p.x, p.u};
            for (double& x : out.x) x *= length;
            for (double& u : out.u) u *= energy;
            return out;
          },
      },
      model.params());
  return ModelSpec(std::move(converted), target);
}

double potential(const ModelSpec& model, double x) {
  switch (model.kind()) {
    case ModelKind::Box: {
      const double a = model.as<BoxParams>().width;
      return (x >= 0.0 && x <= a) ? 0.0 : std::numeric_limits<double>::infinity();
    }
    case ModelKind::Harmonic:
      return 0.5 * model.as<HarmonicParams>().stiffness * x * x;
    case ModelKind::Hydrogenoid: {
      if (!(x > 0.0)) return -std::numeric_limits<double>::infinity();
      const auto& p = model.as<HydrogenoidParams>();
      return -p.charge_number * p.elementary_charge * p.elementary_charge / x;
    }
    case ModelKind::Morse: {
      const auto& p = model.as<MorseParams>();
      const double s = std::exp(-p.range * x);
      return p.depth * (s * s - 2.0 * s);
    }
    case ModelKind::NumericPotential:
      return model.potential_table()(x);
  }
  return 0.0;
}

}  // namespace speclimit
