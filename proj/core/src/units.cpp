#include "speclimit/units.hpp"

#include <cmath>

#include "speclimit/error.hpp"

namespace speclimit {

double UnitSystem::charge_si() const { return std::sqrt(energy_si * length_si); }

namespace {

// Coherent system from a mass and a length scale with hbar = 1.
UnitSystem natural_from_mass_length(std::string name, double mass, double length) {
  UnitSystem u;
  u.name = std::move(name);
  u.hbar = 1.0;
  u.mass_si = mass;
  u.length_si = length;
  u.energy_si = si::hbar * si::hbar / (mass * length * length);
  u.time_si = si::hbar / u.energy_si;
  u.mass_factor = 1.0;
  return u;
}

}  // namespace

UnitSystem unit_system(std::string_view name) {
  if (name == "si") {
    UnitSystem u;
    u.name = "si";
    u.hbar = si::hbar;
    return u;
  }
  if (name == "natural-box") {
    // hbar = m = a = 1 with m the electron mass and a = 1 nm.
    return natural_from_mass_length("natural-box", si::electron_mass, 1e-9);
  }
  if (name == "oscillator") {
    // hbar = m = omega = 1 with m the electron mass and 1/omega = 1 fs.
    UnitSystem u;
    u.name = "oscillator";
    u.hbar = 1.0;
    u.mass_si = si::electron_mass;
    u.time_si = si::femtosecond;
    u.energy_si = si::hbar / u.time_si;
    u.length_si = std::sqrt(si::hbar * u.time_si / u.mass_si);
    u.mass_factor = 1.0;
    return u;
  }
  if (name == "atomic") {
    // Hartree atomic units; the mass unit is derived coherently from
    // hartree and bohr so that it equals m_e to CODATA precision.
    UnitSystem u;
    u.name = "atomic";
    u.hbar = 1.0;
    u.energy_si = si::hartree;
    u.length_si = si::bohr_radius;
    u.time_si = si::hbar / si::hartree;
    u.mass_si = u.energy_si * u.time_si * u.time_si / (u.length_si * u.length_si);
    u.mass_factor = 1.0;
    return u;
  }
  if (name == "molecular") {
    UnitSystem u;
    u.name = "molecular";
    u.energy_si = si::electron_volt;
    u.time_si = si::femtosecond;
    u.length_si = si::angstrom;
    u.mass_si = si::atomic_mass_unit;
    u.hbar = si::hbar / (u.energy_si * u.time_si);
    // 1 amu in eV fs^2 / A^2, about 103.6427.
    u.mass_factor = u.mass_si * u.length_si * u.length_si /
                    (u.time_si * u.time_si * u.energy_si);
    return u;
  }
  throw Error(ErrorKind::InvalidModel, "unknown unit system '" + std::string(name) + "'");
}

std::vector<std::string> unit_system_names() {
  return {"si", "natural-box", "oscillator", "atomic", "molecular"};
}

}  // namespace speclimit
