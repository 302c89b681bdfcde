#include "speclimit/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "speclimit/error.hpp"
#include "speclimit/numeric_format.hpp"
#include "speclimit/rng.hpp"
#include "speclimit/stats.hpp"

namespace speclimit::sim {

namespace {

std::uint64_t trial_stream(int n, long trial) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(n)) << 32) |
         static_cast<std::uint64_t>(static_cast<std::uint32_t>(trial));
}

void reject_degenerate(const ModelSpec& model) {
  if (model.kind() == ModelKind::Harmonic) {
    throw Error(ErrorKind::DegeneratePeriod,
                std::string(criterion::kPeriodDegenerateNote) + " (harmonic period is energy independent)");
  }
}

std::optional<int> first_unresolvable(const std::vector<DiscriminationResult>& results,
                                      double threshold) {
  for (const auto& r : results) {
    if (!(r.d_prime >= threshold)) return r.n_high;
  }
  return std::nullopt;
}

}  // namespace

void PeriodProtocol::validate() const {
  if (s < 1) throw Error(ErrorKind::InvalidProtocol, "protocol s must be >= 1");
  if (trials < 10) throw Error(ErrorKind::InvalidProtocol, "protocol needs at least 10 trials");
  if (delta_t && (!(*delta_t >= 0.0) || !std::isfinite(*delta_t))) {
    throw Error(ErrorKind::InvalidProtocol, "delta_t must be finite and non-negative");
  }
}

double saturating_delta_t(const ModelSpec& model, int n, const criterion::Options& options) {
  const double dE = criterion::max_energy_uncertainty(model, n, options);
  return model.hbar() / (2.0 * dE);
}

PeriodSampleSet simulate_period_measurement(const ModelSpec& model, int n,
                                            const PeriodProtocol& protocol) {
  protocol.validate();
  reject_degenerate(model);
  PeriodSampleSet set;
  set.n = n;
  set.protocol = protocol;
  set.tau = criterion::level_point(model, n, protocol.levels).tau;
  set.delta_t = protocol.delta_t ? *protocol.delta_t
                                 : saturating_delta_t(model, n, protocol.levels);
  set.estimates.reserve(static_cast<std::size_t>(protocol.trials));
  const int inversions = 2 * protocol.s;
  for (long i = 0; i < protocol.trials; ++i) {
    random::Generator gen(protocol.seed, trial_stream(n, i));
    double error = 0.0;
    if (set.delta_t > 0.0) {
      if (protocol.noise == TimingNoise::PerTotal) {
        error = set.delta_t * gen.normal() / protocol.s;
      } else {
        stats::CompensatedSum sum;
        for (int k = 0; k < inversions; ++k) sum.add(set.delta_t * gen.normal());
        error = sum.value() / inversions;
      }
    }
    set.estimates.push_back(set.tau + error);
  }
  return set;
}

DiscriminationResult discriminate(const ModelSpec& model, int n, const PeriodProtocol& protocol,
                                  double d_prime_threshold) {
  protocol.validate();
  reject_degenerate(model);
  PeriodProtocol fixed = protocol;
  if (!fixed.delta_t) fixed.delta_t = saturating_delta_t(model, n, protocol.levels);

  const PeriodSampleSet low = simulate_period_measurement(model, n - 1, fixed);
  const PeriodSampleSet high = simulate_period_measurement(model, n, fixed);

  DiscriminationResult r;
  r.n_low = n - 1;
  r.n_high = n;
  r.tau_low = low.tau;
  r.tau_high = high.tau;
  r.delta_t = *fixed.delta_t;
  r.mean_low = stats::mean(low.estimates);
  r.mean_high = stats::mean(high.estimates);
  r.sd_low = stats::stddev(low.estimates);
  r.sd_high = stats::stddev(high.estimates);
  const double separation = std::abs(r.mean_high - r.mean_low);
  const double pooled = std::sqrt(0.5 * (r.sd_low * r.sd_low + r.sd_high * r.sd_high));
  if (pooled == 0.0) {
    r.noise_free = true;
    r.d_prime = separation > 0.0 ? kDPrimeCap : 0.0;
  } else {
    r.d_prime = std::min(separation / pooled, kDPrimeCap);
  }
  r.bayes_error = stats::bayes_error(r.mean_low, r.sd_low, r.mean_high, r.sd_high);
  r.mc_resolvable = r.d_prime >= d_prime_threshold;
  const criterion::LevelGap gap = criterion::level_gap(model, n, protocol.levels);
  r.y_over_hbar = gap.y_over_hbar;
  r.criterion_resolvable = gap.resolvable;
  return r;
}

Sweep consistency_sweep(const ModelSpec& model, int n_first, int n_last,
                        const PeriodProtocol& protocol) {
  protocol.validate();
  reject_degenerate(model);
  Sweep sweep;
  sweep.protocol = protocol;
  const int first = std::max(n_first, model.n_min() + 1);
  int last = n_last;
  if (auto top = model.n_max()) last = std::min(last, *top);
  for (int n = first; n <= last; ++n) {
    sweep.results.push_back(discriminate(model, n, protocol));
  }

  SweepSummary& s = sweep.summary;
  s.mc_crossover = first_unresolvable(sweep.results, kResolvableDPrime);
  for (const auto& r : sweep.results) {
    if (!r.criterion_resolvable && !s.criterion_threshold) s.criterion_threshold = r.n_high;
    if (r.mc_resolvable == r.criterion_resolvable) {
      ++s.agreements;
    } else {
      s.disagreements.push_back(r.n_high);
    }
  }
  if (s.mc_crossover && s.criterion_threshold) {
    s.crossover_agrees = std::abs(*s.mc_crossover - *s.criterion_threshold) <= 1;
  } else {
    s.crossover_agrees = !s.mc_crossover && !s.criterion_threshold;
  }
  for (double t : {1.5, 2.0, 2.5}) {
    s.sensitivity.emplace_back(t, first_unresolvable(sweep.results, t));
  }
  return sweep;
}

std::string sweep_csv(const Sweep& sweep) {
  std::ostringstream os;
  os << "n,tau_n,d_prime,bayes_error,mc_resolvable,y_over_hbar,criterion_resolvable\n";
  for (const auto& r : sweep.results) {
    os << r.n_high << ',' << fmt12(r.tau_high) << ',' << fmt12(r.d_prime) << ','
       << fmt12(r.bayes_error) << ',' << (r.mc_resolvable ? "true" : "false") << ','
       << fmt12(r.y_over_hbar) << ',' << (r.criterion_resolvable ? "true" : "false") << '\n';
  }
  return os.str();
}

nlohmann::json protocol_json(const PeriodProtocol& protocol) {
  return {{"s", protocol.s},
          {"delta_t", protocol.delta_t ? nlohmann::json(round12(*protocol.delta_t))
                                       : nlohmann::json("saturating")},
          {"trials", protocol.trials},
          {"seed", protocol.seed},
          {"timing_noise", protocol.noise == TimingNoise::PerTotal ? "per-total" : "per-inversion"}};
}

nlohmann::json sweep_json(const Sweep& sweep) {
  const SweepSummary& s = sweep.summary;
  auto opt = [](const std::optional<int>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  nlohmann::json sensitivity = nlohmann::json::array();
  for (const auto& [t, n] : s.sensitivity) {
    sensitivity.push_back({{"d_prime_threshold", t}, {"mc_crossover", opt(n)}});
  }
  std::string verdict = "no crossover in range";
  if (s.criterion_threshold) {
    verdict = "crossover " + std::to_string(*s.criterion_threshold) + "±1";
  }
  int mc_resolvable = 0;
  for (const auto& r : sweep.results) mc_resolvable += r.mc_resolvable ? 1 : 0;
  return {{"protocol", protocol_json(sweep.protocol)},
          {"d_prime_threshold", kResolvableDPrime},
          {"mc_crossover", opt(s.mc_crossover)},
          {"criterion_threshold", opt(s.criterion_threshold)},
          {"crossover_agrees", s.crossover_agrees},
          {"expected", verdict},
          {"agreements", s.agreements},
          {"disagreements", s.disagreements},
          {"mc_resolvable_pairs", mc_resolvable},
          {"sensitivity", sensitivity}};
}

}  // namespace speclimit::sim
