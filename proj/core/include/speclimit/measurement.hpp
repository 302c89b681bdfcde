#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "speclimit/criterion.hpp"
#include "speclimit/models.hpp"

namespace speclimit::sim {

enum class TimingNoise {
  /// One Gaussian error of st.dev. delta_t on the total elapsed time.
  PerTotal,
  /// Independent errors on each of the 2s inversions, averaged.
  PerInversion,
};

/// Time 2s momentum inversions (s full periods) with clock accuracy delta_t.
struct PeriodProtocol {
  int s = 1;
  /// Empty selects the time-energy saturating value hbar / (2 dE_n).
  std::optional<double> delta_t;
  long trials = 10000;
  std::uint64_t seed = 0;
  TimingNoise noise = TimingNoise::PerTotal;
  criterion::Options levels;

  /// Throws InvalidProtocol unless s >= 1, trials >= 10, delta_t >= 0.
  void validate() const;
};

struct PeriodSampleSet {
  int n = 0;
  double tau = 0.0;      ///< exact period of level n
  double delta_t = 0.0;  ///< timing accuracy actually used
  std::vector<double> estimates;
  PeriodProtocol protocol;
};

/// hbar / (2 dE_n) with dE_n = (E_n - E_{n-1}) / 2.
double saturating_delta_t(const ModelSpec& model, int n, const criterion::Options& options = {});

/// Each trial: tau_hat = tau_n + eps / s (per-total noise). Trial i of level n
/// draws from substream (n, i) of the protocol seed, so results do not depend
/// on evaluation order.
PeriodSampleSet simulate_period_measurement(const ModelSpec& model, int n,
                                            const PeriodProtocol& protocol);

inline constexpr double kResolvableDPrime = 2.0;
inline constexpr double kDPrimeCap = 1e12;

struct DiscriminationResult {
  int n_low = 0;
  int n_high = 0;
  double tau_low = 0.0;
  double tau_high = 0.0;
  double mean_low = 0.0;
  double mean_high = 0.0;
  double sd_low = 0.0;
  double sd_high = 0.0;
  double delta_t = 0.0;
  double d_prime = 0.0;
  double bayes_error = 0.5;
  bool noise_free = false;
  bool mc_resolvable = false;
  double y_over_hbar = 0.0;
  bool criterion_resolvable = false;
};

/// Simulates levels n-1 and n under the same protocol. With no explicit
/// delta_t both levels use hbar / (2 dE_n).
DiscriminationResult discriminate(const ModelSpec& model, int n, const PeriodProtocol& protocol,
                                  double d_prime_threshold = kResolvableDPrime);

struct SweepSummary {
  std::optional<int> mc_crossover;        ///< first n with mc_resolvable == false
  std::optional<int> criterion_threshold; ///< first n with y < hbar/2
  bool crossover_agrees = false;          ///< both present and within +-1, or both absent
  int agreements = 0;
  std::vector<int> disagreements;
  /// MC crossover for alternative d' thresholds.
  std::vector<std::pair<double, std::optional<int>>> sensitivity;
};

struct Sweep {
  std::vector<DiscriminationResult> results;
  SweepSummary summary;
  PeriodProtocol protocol;
};

Sweep consistency_sweep(const ModelSpec& model, int n_first, int n_last,
                        const PeriodProtocol& protocol);

std::string sweep_csv(const Sweep& sweep);
nlohmann::json sweep_json(const Sweep& sweep);
nlohmann::json protocol_json(const PeriodProtocol& protocol);

}  // namespace speclimit::sim
