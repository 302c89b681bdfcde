#pragma once

#include <memory>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "speclimit/monotone_cubic.hpp"
#include "speclimit/units.hpp"

namespace speclimit {

enum class ModelKind { Box, Harmonic, Hydrogenoid, Morse, NumericPotential };

std::string_view to_string(ModelKind kind);

// Parameters are expressed in the model's UnitSystem. Masses are in the
// system's mass unit (amu for "molecular"); see UnitSystem::mass_factor.

struct BoxParams {
  double mass = 1.0;
  double width = 1.0;
};

struct HarmonicParams {
  double mass = 1.0;
  double stiffness = 1.0;
};

/// U(x) = -Z e^2 / x on x > 0 (radial s-wave, Gaussian charge convention).
struct HydrogenoidParams {
  double reduced_mass = 1.0;
  int charge_number = 1;
  double elementary_charge = 1.0;
};

/// U(x) = D (exp(-2 alpha x) - 2 exp(-alpha x)).
struct MorseParams {
  double mass = 1.0;
  double depth = 1.0;
  double range = 1.0;
};

struct NumericPotentialParams {
  double mass = 1.0;
  std::vector<double> x;
  std::vector<double> u;
};

using ModelParams = std::variant<BoxParams, HarmonicParams, HydrogenoidParams, MorseParams,
                                 NumericPotentialParams>;

/**
 * Immutable, validated description of a 1-D bound system.
 *
 * Construction rejects non-physical parameters, so every ModelSpec in
 * circulation satisfies its invariants. Copies share the interpolation
 * table of numeric potentials.
 */
class ModelSpec {
 public:
  ModelSpec(ModelParams params, UnitSystem units);

  ModelKind kind() const;
  const ModelParams& params() const { return params_; }
  const UnitSystem& units() const { return units_; }
  double hbar() const { return units_.hbar; }

  /// Mass in the coherent mass unit of the model's unit system.
  double coherent_mass() const;

  /// Angular frequency; Harmonic and Morse only.
  double omega() const;

  /// Morse anharmonicity zeta = 4D/(hbar omega); levels exist while n + 1/2 < zeta/2.
  double zeta() const;

  /// Smallest valid quantum number (1 for box and hydrogenoid, else 0).
  int n_min() const;

  /// Largest bound quantum number, when the model has finitely many levels.
  std::optional<int> n_max() const;

  /// Interpolant of a NumericPotential table.
  const MonotoneCubic& potential_table() const;

  template <class P>
  const P& as() const {
    return std::get<P>(params_);
  }

 private:
  ModelParams params_;
  UnitSystem units_;
  std::shared_ptr<const MonotoneCubic> table_;
};

struct EnergyLevel {
  int n = 0;
  double energy = 0.0;
  bool bound = true;
};

struct PeriodPoint {
  int n = 0;
  double tau = 0.0;
};

/// Closed-form E_n. Throws OutOfRange outside [n_min, n_max] and
/// Unsupported for numeric potentials.
EnergyLevel energy_level(const ModelSpec& model, int n);

/// Classical period of the orbit with energy E_n.
PeriodPoint classical_period(const ModelSpec& model, int n);

/// All levels n_min .. min(n_max, n_min + n_limit - 1).
std::vector<EnergyLevel> bound_levels(const ModelSpec& model, int n_limit);

/// Same model expressed in another unit system.
ModelSpec convert_units(const ModelSpec& model, const UnitSystem& target);

/// Potential energy U(x) of the model; the box returns 0 inside the walls.
double potential(const ModelSpec& model, double x);

}  // namespace speclimit
