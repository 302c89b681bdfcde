#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "speclimit/models.hpp"

namespace speclimit::noise {

/// Position/momentum spreads of a prepared ensemble. A budget can be
/// prepared only at or above the standard quantum limit dx*dp = hbar/2.
struct NoiseBudget {
  double delta_x = 0.0;
  double delta_p = 0.0;
  double product_over_hbar = 0.0;

  static NoiseBudget make(double delta_x, double delta_p, double hbar);
  bool preparable() const;
};

/// Tolerance on product_over_hbar below 1/2 that still counts as preparable.
inline constexpr double kSqlTolerance = 1e-12;

/// Outcomes x_i = center + xi_i, xi_i ~ N(0, sigma^2).
struct MeasurementEnsemble {
  std::vector<double> samples;
  std::uint64_t seed = 0;
  double true_center = 0.0;
  double sigma = 0.0;
};

/// Deterministic per (seed, stream). Throws InvalidCount (count < 2) and
/// InvalidSigma (sigma < 0 or not finite).
MeasurementEnsemble sample_ensemble(double center, double sigma, long count, std::uint64_t seed,
                                    std::uint64_t stream = 0);

/// exp(-p^2 dx^2 / (2 hbar^2)), the ensemble mean of exp(-i p xi / hbar).
double characteristic_factor(double delta_x, double p, double hbar);

/// Monte Carlo estimate of the ensemble mean of exp(-i p xi / hbar), with xi
/// the deviations of the samples from the ensemble's true center.
struct CharacteristicEstimate {
  double real = 0.0;
  double imag = 0.0;
  double standard_error_real = 0.0;
  double standard_error_imag = 0.0;
};

CharacteristicEstimate ensemble_characteristic(const MeasurementEnsemble& ensemble, double p,
                                               double hbar);

/// Gaussian profile reconstructed from position and momentum ensembles.
/// delta_x and delta_p are the single width symbols used for the variance
/// in both the position and the momentum profile.
struct GaussianState {
  double r = 0.0;
  double d = 0.0;
  double delta_x = 0.0;
  double delta_p = 0.0;
  double product_over_hbar = 0.0;
  bool sub_sql = false;

  double position_density(double x) const;
  double momentum_density(double p) const;
  /// Integral of the position density over r +/- half_width * delta_x.
  double position_normalization(double half_width = 8.0) const;
};

GaussianState reconstruct_state(const MeasurementEnsemble& position,
                                const MeasurementEnsemble& momentum, double hbar);

/// Classical energy error of a simultaneous (q, p) measurement of a
/// harmonic oscillator with dp = sqrt(m hbar omega / 2) a and
/// dq = sqrt(hbar / (2 m omega)) a.
double harmonic_energy_error(double q, double p, double mass, double stiffness, double a,
                             double hbar);

/// The a-independent bracket |p| sqrt(hbar w / 2m) + k |q| sqrt(hbar / (2 m w)).
double harmonic_error_bracket(double q, double p, double mass, double stiffness, double hbar);

struct HarmonicWidths {
  double delta_p = 0.0;
  double delta_q = 0.0;
};
HarmonicWidths harmonic_widths(double mass, double stiffness, double a, double hbar);

/// Largest bracket over the classical orbit of energy E (phase maximization).
double max_bracket_on_orbit(double energy, double mass, double stiffness, double hbar);

/**
 * Smallest dp*dq (in units of hbar) for which the worst-phase classical
 * energy error equals the level spacing bound hbar*omega/2 at level n.
 * Harmonic models only.
 */
double required_noise_product_for_resolution(const ModelSpec& model, int n);

/// CSV with "# seed=", "# sigma=", "# center=" header lines and one
/// outcome per line under the column "outcome".
std::string ensemble_csv(const MeasurementEnsemble& ensemble);
MeasurementEnsemble ensemble_from_csv(std::string_view text);

}  // namespace speclimit::noise
