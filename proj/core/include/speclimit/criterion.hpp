#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "speclimit/models.hpp"

namespace speclimit::criterion {

/// Two-level state a|E_n> + b|E_{n-1}>.
class SuperpositionState {
 public:
  /// Throws InvalidModel unless |a|^2 + |b|^2 = 1 (1e-12) and the levels are adjacent.
  SuperpositionState(std::complex<double> a, std::complex<double> b, EnergyLevel level_n,
                     EnergyLevel level_n_minus_1);

  std::complex<double> amplitude_a() const { return a_; }
  std::complex<double> amplitude_b() const { return b_; }
  const EnergyLevel& level_n() const { return upper_; }
  const EnergyLevel& level_n_minus_1() const { return lower_; }

 private:
  std::complex<double> a_;
  std::complex<double> b_;
  EnergyLevel upper_;
  EnergyLevel lower_;
};

/// Energy spread |a||b|(E_n - E_{n-1}); constant in time.
double energy_uncertainty(const SuperpositionState& state);

enum class LevelSource { Auto, ClosedForm, Semiclassical };

struct Options {
  LevelSource source = LevelSource::Auto;
  /// Maslov count for semiclassical levels; negative selects the model default.
  int maslov = -1;
};

struct LevelPoint {
  double energy = 0.0;
  double tau = 0.0;
};

/// Energy and classical period of level n from the selected source.
LevelPoint level_point(const ModelSpec& model, int n, const Options& options = {});

/// Half the spacing |E_n - E_{n-1}| / 2, the largest spread over all (a, b).
double max_energy_uncertainty(const ModelSpec& model, int n, const Options& options = {});

inline constexpr std::string_view kPeriodDegenerateNote =
    "period-degenerate: criterion inconclusive by period measurement";

struct LevelGap {
  int n = 0;
  double energy_n = 0.0;
  double tau_n = 0.0;
  double dE = 0.0;        ///< (E_n - E_{n-1}) / 2
  double dTau = 0.0;      ///< (tau_n - tau_{n-1}) / 2, signed
  double y_over_hbar = 0.0;
  bool resolvable = false;  ///< y >= hbar/2
  bool period_degenerate = false;
};

/// Gap record for the pair (n-1, n).
LevelGap level_gap(const ModelSpec& model, int n, const Options& options = {});

/// |dE * dTau| / hbar.
double y_function(const ModelSpec& model, int n, const Options& options = {});

enum class Regime { AllResolvable, AllUnresolvable, Crossover, NonMonotone };

std::string_view to_string(Regime regime);

struct ResolvabilityReport {
  explicit ResolvabilityReport(ModelSpec m) : model(std::move(m)) {}

  ModelSpec model;
  LevelSource source = LevelSource::ClosedForm;
  std::vector<LevelGap> gaps;
  /// Smallest n in range with y < hbar/2.
  std::optional<int> threshold;
  Regime regime = Regime::AllResolvable;
  /// Every n where the resolvable flag flips relative to n-1.
  std::vector<int> crossings;
  /// y non-increasing over the gaps after the threshold.
  bool monotone_tail = true;
  std::vector<std::pair<int, double>> ratio_series;  ///< (n, |dE_n / E_n|)
  std::vector<std::string> notes;
};

/// Gaps for n in [n_first, n_last]; n_first is raised to n_min + 1 and n_last
/// is clipped to n_max for finite spectra.
ResolvabilityReport classify(const ModelSpec& model, int n_first, int n_last,
                             const Options& options = {});

/// Merges reports over disjoint ranges of the same model, ordered by n.
ResolvabilityReport merge(std::vector<ResolvabilityReport> parts);

inline constexpr long kDefaultScanLimit = 1'000'000;

/// Smallest n > n_min with y(n) < hbar/2. Empty when a finite spectrum ends
/// without a crossing; ScanLimitExceeded when an infinite one is scanned
/// past n_min + scan_limit.
std::optional<int> threshold(const ModelSpec& model, long scan_limit = kDefaultScanLimit,
                             const Options& options = {});

std::string report_csv(const ResolvabilityReport& report);
std::string plot_data_csv(const ResolvabilityReport& report);
nlohmann::json report_json(const ResolvabilityReport& report);

}  // namespace speclimit::criterion
