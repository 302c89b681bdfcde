#include "speclimit/criterion.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "speclimit/error.hpp"
#include "speclimit/numeric_format.hpp"
#include "speclimit/semiclassical.hpp"

namespace speclimit::criterion {

namespace {

LevelSource resolve(const ModelSpec& model, LevelSource source) {
  if (source != LevelSource::Auto) return source;
  return model.kind() == ModelKind::NumericPotential ? LevelSource::Semiclassical
                                                      : LevelSource::ClosedForm;
}

// Relative size below which the period difference counts as zero.
constexpr double kDegeneratePeriodTolerance = 1e-9;

void finalize(ResolvabilityReport& report) {
  auto& gaps = report.gaps;
  std::sort(gaps.begin(), gaps.end(), [](const LevelGap& a, const LevelGap& b) { return a.n < b.n; });

  report.threshold.reset();
  report.crossings.clear();
  report.ratio_series.clear();
  report.notes.clear();
  report.monotone_tail = true;

  bool any_resolvable = false;
  bool any_unresolvable = false;
  bool any_degenerate = false;
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    const LevelGap& g = gaps[i];
    any_resolvable = any_resolvable || g.resolvable;
    any_unresolvable = any_unresolvable || !g.resolvable;
    any_degenerate = any_degenerate || g.period_degenerate;
    if (!g.resolvable && !report.threshold) report.threshold = g.n;
    if (i > 0 && gaps[i - 1].resolvable != g.resolvable) report.crossings.push_back(g.n);
    report.ratio_series.emplace_back(g.n, g.energy_n != 0.0 ? std::abs(g.dE / g.energy_n) : 0.0);
  }
  if (report.threshold) {
    for (std::size_t i = 1; i < gaps.size(); ++i) {
      if (gaps[i - 1].n >= *report.threshold && gaps[i].y_over_hbar > gaps[i - 1].y_over_hbar) {
        report.monotone_tail = false;
      }
    }
  }

  if (!any_unresolvable) {
    report.regime = Regime::AllResolvable;
  } else if (!any_resolvable) {
    report.regime = Regime::AllUnresolvable;
  } else if (report.crossings.size() == 1 && gaps.front().resolvable) {
    report.regime = Regime::Crossover;
  } else {
    report.regime = Regime::NonMonotone;
  }

  if (any_degenerate) report.notes.emplace_back(kPeriodDegenerateNote);
  if (report.regime == Regime::NonMonotone) {
    std::string ns;
    for (const LevelGap& g : gaps) {
      if (g.resolvable && report.threshold && g.n > *report.threshold) {
        ns += (ns.empty() ? "" : ", ") + std::to_string(g.n);
      }
    }
    report.notes.push_back("y/hbar rises back above 1/2 after the first crossing at n = " + ns);
  }
  if (report.model.kind() == ModelKind::Hydrogenoid) {
    const double y9 = y_function(report.model, 9);
    const double y10 = y_function(report.model, 10);
    report.notes.push_back("literature threshold n >= 9 disagrees with the closed form: y(9)/hbar = " +
                           fmt12(y9) + " > 1/2, y(10)/hbar = " + fmt12(y10) +
                           " < 1/2, so the threshold is 10");
  }
}

}  // namespace

LevelPoint level_point(const ModelSpec& model, int n, const Options& options) {
  if (resolve(model, options.source) == LevelSource::ClosedForm) {
    return {energy_level(model, n).energy, classical_period(model, n).tau};
  }
  if (n < model.n_min()) {
    throw Error(ErrorKind::OutOfRange, "quantum number n=" + std::to_string(n) + " below minimum");
  }
  const int maslov =
      options.maslov >= 0 ? options.maslov : semiclassical::default_maslov(model);
  const double e = semiclassical::quantize(model, n, maslov).energy;
  return {e, semiclassical::period_of_energy(model, e).tau};
}

SuperpositionState::SuperpositionState(std::complex<double> a, std::complex<double> b,
                                       EnergyLevel level_n, EnergyLevel level_n_minus_1)
    : a_(a), b_(b), upper_(level_n), lower_(level_n_minus_1) {
  const double norm = std::norm(a) + std::norm(b);
  if (!(std::abs(norm - 1.0) <= 1e-12)) {
    throw Error(ErrorKind::InvalidModel,
                "superposition amplitudes must satisfy |a|^2 + |b|^2 = 1 (got " + fmt12(norm) + ")");
  }
  if (upper_.n != lower_.n + 1) {
    throw Error(ErrorKind::InvalidModel, "superposition levels must be adjacent (n and n-1)");
  }
}

double energy_uncertainty(const SuperpositionState& state) {
  return std::abs(state.amplitude_a()) * std::abs(state.amplitude_b()) *
         std::abs(state.level_n().energy - state.level_n_minus_1().energy);
}

double max_energy_uncertainty(const ModelSpec& model, int n, const Options& options) {
  const double upper = level_point(model, n, options).energy;
  const double lower = level_point(model, n - 1, options).energy;
  return 0.5 * std::abs(upper - lower);
}

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::AllResolvable: return "all-resolvable";
    case Regime::AllUnresolvable: return "all-unresolvable";
    case Regime::Crossover: return "crossover";
    case Regime::NonMonotone: return "non-monotone";
  }
  return "unknown";
}

LevelGap level_gap(const ModelSpec& model, int n, const Options& options) {
  if (n - 1 < model.n_min()) {
    throw Error(ErrorKind::OutOfRange, "level pair (n-1, n) needs n >= " +
                                           std::to_string(model.n_min() + 1));
  }
  const LevelPoint upper = level_point(model, n, options);
  const LevelPoint lower = level_point(model, n - 1, options);
  LevelGap g;
  g.n = n;
  g.energy_n = upper.energy;
  g.tau_n = upper.tau;
  g.dE = 0.5 * (upper.energy - lower.energy);
  g.dTau = 0.5 * (upper.tau - lower.tau);
  const double tau_scale = std::max(std::abs(upper.tau), std::abs(lower.tau));
  if (std::abs(g.dTau) <= kDegeneratePeriodTolerance * tau_scale) {
    g.period_degenerate = true;
    g.dTau = 0.0;
  }
  g.y_over_hbar = std::abs(g.dE * g.dTau) / model.hbar();
  g.resolvable = g.y_over_hbar >= 0.5;
  return g;
}

double y_function(const ModelSpec& model, int n, const Options& options) {
  return level_gap(model, n, options).y_over_hbar;
}

ResolvabilityReport classify(const ModelSpec& model, int n_first, int n_last,
                             const Options& options) {
  ResolvabilityReport report(model);
  report.source = resolve(model, options.source);
  const int first = std::max(n_first, model.n_min() + 1);
  int last = n_last;
  if (auto top = model.n_max()) last = std::min(last, *top);
  bool truncated = false;
  for (int n = first; n <= last; ++n) {
    try {
      report.gaps.push_back(level_gap(model, n, options));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ActionOutOfRange) throw;
      truncated = true;
      break;
    }
  }
  finalize(report);
  if (truncated) {
    report.notes.push_back("semiclassical spectrum ends before n = " +
                           std::to_string(report.gaps.empty() ? first : report.gaps.back().n + 1));
  }
  return report;
}

ResolvabilityReport merge(std::vector<ResolvabilityReport> parts) {
  if (parts.empty()) throw Error(ErrorKind::InvalidModel, "nothing to merge");
  ResolvabilityReport out(parts.front().model);
  out.source = parts.front().source;
  for (auto& p : parts) {
    out.gaps.insert(out.gaps.end(), p.gaps.begin(), p.gaps.end());
  }
  finalize(out);
  return out;
}

std::optional<int> threshold(const ModelSpec& model, long scan_limit, const Options& options) {
  const long first = model.n_min() + 1;
  const auto top = model.n_max();
  for (long n = first;; ++n) {
    if (top && n > *top) return std::nullopt;
    if (n - first >= scan_limit) {
      throw Error(ErrorKind::ScanLimitExceeded,
                  "no level with y < hbar/2 within " + std::to_string(scan_limit) + " levels");
    }
    if (!level_gap(model, static_cast<int>(n), options).resolvable) {
      return static_cast<int>(n);
    }
  }
}

}  // namespace speclimit::criterion
