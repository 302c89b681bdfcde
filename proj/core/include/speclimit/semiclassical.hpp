#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "speclimit/models.hpp"

namespace speclimit::semiclassical {

/// Classical turning points of the orbit at energy E.
///
/// For the hydrogenoid radial s-orbit the inner point is the origin
/// (collision orbit); for the box both points are the walls.
struct TurningPoints {
  double energy = 0.0;
  double x_minus = 0.0;
  double x_plus = 0.0;
};

/// Energy range (floor, ceiling) supporting bound motion. Either end may be
/// infinite.
struct EnergyWindow {
  double floor = 0.0;
  double ceiling = 0.0;
};

struct PeriodEstimate {
  double tau = 0.0;               ///< sqrt(2m) * integral of dx / sqrt(E - U)
  double action_derivative = 0.0; ///< centered difference dI/dE
  double residual = 0.0;          ///< |tau - dI/dE| / tau
};

/// Sampled action curve I(E) with its period dI/dE.
struct ActionCurve {
  std::vector<double> energy;
  std::vector<double> action;
  std::vector<double> derivative;
};

inline constexpr double kQuadratureTolerance = 1e-12;
inline constexpr double kAcceptedQuadratureError = 1e-8;
inline constexpr double kPeriodSelfCheckTolerance = 1e-6;
inline constexpr int kMaxScanSteps = 1 << 10;

EnergyWindow energy_window(const ModelSpec& model);

/// Throws NoBoundMotion when E is outside the open window, RootNotBracketed
/// if the geometric scan fails.
TurningPoints turning_points(const ModelSpec& model, double energy);

/// I(E) = closed-loop integral of p dq. Returns 0 at the bottom of the well.
double action(const ModelSpec& model, double energy);

/// Centered-difference dI/dE.
double action_derivative(const ModelSpec& model, double energy);

/// Period from the direct integral, cross-checked against dI/dE; throws
/// QuadratureFailure when they disagree by more than 1e-6 relative.
PeriodEstimate period_of_energy(const ModelSpec& model, double energy);

/// Maslov quarter-phase count: 0 hard walls (and the Coulomb origin),
/// 1 one wall, 2 two smooth turning points.
int default_maslov(const ModelSpec& model);

/// Solves I(E) = 2 pi hbar (n + maslov/4).
EnergyLevel quantize(const ModelSpec& model, int n, int maslov);
EnergyLevel quantize(const ModelSpec& model, int n);

ActionCurve action_curve(const ModelSpec& model, std::span<const double> energies);

}  // namespace speclimit::semiclassical
