#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace speclimit {

/// CODATA 2018 values used to anchor every unit system to SI.
namespace si {
inline constexpr double hbar = 1.054571817e-34;             // J s
inline constexpr double electron_volt = 1.602176634e-19;    // J
inline constexpr double atomic_mass_unit = 1.66053906660e-27;  // kg
inline constexpr double electron_mass = 9.1093837015e-31;   // kg
inline constexpr double bohr_radius = 5.29177210903e-11;    // m
inline constexpr double hartree = 4.3597447222071e-18;      // J
inline constexpr double angstrom = 1e-10;                   // m
inline constexpr double femtosecond = 1e-15;                // s
}  // namespace si

/**
 * A set of base units for energy, time, length and mass, each given as a
 * factor to SI, plus the value of hbar expressed in energy*time.
 *
 * Model formulas need a coherent system (energy = mass*length^2/time^2).
 * Systems built from mixed units (eV, Angstrom, amu, fs) are not coherent,
 * so `mass_factor` converts a mass in this system into the coherent mass
 * unit energy*time^2/length^2. It is exactly 1 for the natural systems.
 */
struct UnitSystem {
  std::string name;
  double hbar = 1.0;
  double energy_si = 1.0;
  double time_si = 1.0;
  double length_si = 1.0;
  double mass_si = 1.0;
  double mass_factor = 1.0;

  /// Gaussian-convention charge unit, sqrt(energy*length).
  double charge_si() const;
};

/// Built-in systems: "si", "natural-box", "oscillator", "atomic", "molecular".
UnitSystem unit_system(std::string_view name);
std::vector<std::string> unit_system_names();

}  // namespace speclimit
