#include "speclimit/noise.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/minima.hpp>

#include "speclimit/error.hpp"
#include "speclimit/numeric_format.hpp"
#include "speclimit/rng.hpp"
#include "speclimit/stats.hpp"

namespace speclimit::noise {

namespace {

constexpr double pi = std::numbers::pi;

double gaussian_pdf(double x, double center, double width) {
  if (!(width > 0.0)) {
    throw Error(ErrorKind::DegenerateEnsemble, "density of a zero-width state is not a function");
  }
  const double z = (x - center) / width;
  return std::exp(-0.5 * z * z) / std::sqrt(2.0 * pi * width * width);
}

double parse_double(std::string_view text, const std::string& what) {
  double v = 0.0;
  // Leading/trailing blanks are not expected in files we write.
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::Config, "ensemble CSV: cannot parse " + what + " '" +
                                       std::string(text) + "'");
  }
  return v;
}

}  // namespace

NoiseBudget NoiseBudget::make(double delta_x, double delta_p, double hbar) {
  if (!(delta_x >= 0.0) || !(delta_p >= 0.0)) {
    throw Error(ErrorKind::InvalidSigma, "noise widths must be non-negative");
  }
  return {delta_x, delta_p, delta_x * delta_p / hbar};
}

bool NoiseBudget::preparable() const { return !(product_over_hbar < 0.5 - kSqlTolerance); }

MeasurementEnsemble sample_ensemble(double center, double sigma, long count, std::uint64_t seed,
                                    std::uint64_t stream) {
  if (count < 2) throw Error(ErrorKind::InvalidCount, "ensemble needs at least 2 outcomes");
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    throw Error(ErrorKind::InvalidSigma, "sigma must be finite and non-negative");
  }
  MeasurementEnsemble ens{{}, seed, center, sigma};
  ens.samples.reserve(static_cast<std::size_t>(count));
  random::Generator gen(seed, stream);
  for (long i = 0; i < count; ++i) {
    ens.samples.push_back(center + sigma * gen.normal());
  }
  return ens;
}

double characteristic_factor(double delta_x, double p, double hbar) {
  return std::exp(-p * p * delta_x * delta_x / (2.0 * hbar * hbar));
}

CharacteristicEstimate ensemble_characteristic(const MeasurementEnsemble& ensemble, double p,
                                               double hbar) {
  const std::size_t n = ensemble.samples.size();
  if (n < 2) throw Error(ErrorKind::InvalidCount, "ensemble needs at least 2 outcomes");
  std::vector<double> re(n);
  std::vector<double> im(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double phase = -p * (ensemble.samples[i] - ensemble.true_center) / hbar;
    re[i] = std::cos(phase);
    im[i] = std::sin(phase);
  }
  const double root_n = std::sqrt(static_cast<double>(n));
  return {stats::mean(re), stats::mean(im), stats::stddev(re) / root_n,
          stats::stddev(im) / root_n};
}

double GaussianState::position_density(double x) const { return gaussian_pdf(x, r, delta_x); }

double GaussianState::momentum_density(double p) const { return gaussian_pdf(p, d, delta_p); }

double GaussianState::position_normalization(double half_width) const {
  auto f = [this](double x) { return position_density(x); };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      f, r - half_width * delta_x, r + half_width * delta_x, 15, 1e-14);
}

GaussianState reconstruct_state(const MeasurementEnsemble& position,
                                const MeasurementEnsemble& momentum, double hbar) {
  if (position.samples.size() < 2 || momentum.samples.size() < 2) {
    throw Error(ErrorKind::InvalidCount, "reconstruction needs two non-trivial ensembles");
  }
  GaussianState state;
  state.r = stats::mean(position.samples);
  state.d = stats::mean(momentum.samples);
  state.delta_x = stats::stddev(position.samples);
  state.delta_p = stats::stddev(momentum.samples);
  if ((state.delta_x == 0.0 && position.sigma > 0.0) ||
      (state.delta_p == 0.0 && momentum.sigma > 0.0)) {
    throw Error(ErrorKind::DegenerateEnsemble,
                "sample variance vanished although the ensemble was generated with noise");
  }
  state.product_over_hbar = state.delta_x * state.delta_p / hbar;
  state.sub_sql = state.product_over_hbar < 0.5 - kSqlTolerance;
  return state;
}

double harmonic_error_bracket(double q, double p, double mass, double stiffness, double hbar) {
  const double omega = std::sqrt(stiffness / mass);
  return std::abs(p) * std::sqrt(hbar * omega / (2.0 * mass)) +
         stiffness * std::abs(q) * std::sqrt(hbar / (2.0 * mass * omega));
}

double harmonic_energy_error(double q, double p, double mass, double stiffness, double a,
                             double hbar) {
  return harmonic_error_bracket(q, p, mass, stiffness, hbar) * a;
}

HarmonicWidths harmonic_widths(double mass, double stiffness, double a, double hbar) {
  const double omega = std::sqrt(stiffness / mass);
  return {std::sqrt(mass * hbar * omega / 2.0) * a, std::sqrt(hbar / (2.0 * mass * omega)) * a};
}

double max_bracket_on_orbit(double energy, double mass, double stiffness, double hbar) {
  const double p_amp = std::sqrt(2.0 * mass * energy);
  const double q_amp = std::sqrt(2.0 * energy / stiffness);
  // The bracket depends on |cos|, |sin| only, so one quadrant covers the orbit.
  auto negative_bracket = [&](double phase) {
    return -harmonic_error_bracket(q_amp * std::sin(phase), p_amp * std::cos(phase), mass,
                                   stiffness, hbar);
  };
  const auto [phase, value] =
      boost::math::tools::brent_find_minima(negative_bracket, 0.0, pi / 2.0, 52);
  // Endpoints are not sampled by Brent.
  return std::max({-value, -negative_bracket(0.0), -negative_bracket(pi / 2.0)});
}

double required_noise_product_for_resolution(const ModelSpec& model, int n) {
  if (model.kind() != ModelKind::Harmonic) {
    throw Error(ErrorKind::Unsupported, "noise product for resolution is defined for harmonic models");
  }
  const double hbar = model.hbar();
  const double energy = energy_level(model, n).energy;
  const double bracket = max_bracket_on_orbit(energy, model.coherent_mass(),
                                              model.as<HarmonicParams>().stiffness, hbar);
  const double spacing_bound = 0.5 * hbar * model.omega();
  // dE^2 = (2/hbar) B^2 dp dq  =>  dp dq = hbar dE^2 / (2 B^2)
  const double product = hbar * spacing_bound * spacing_bound / (2.0 * bracket * bracket);
  return product / hbar;
}

std::string ensemble_csv(const MeasurementEnsemble& ensemble) {
  std::ostringstream os;
  os << "# seed=" << ensemble.seed << '\n'
     << "# sigma=" << fmt12(ensemble.sigma) << '\n'
     << "# center=" << fmt12(ensemble.true_center) << '\n'
     << "outcome\n";
  for (double x : ensemble.samples) os << fmt12(x) << '\n';
  return os.str();
}

MeasurementEnsemble ensemble_from_csv(std::string_view text) {
  MeasurementEnsemble ens;
  bool have_seed = false;
  bool have_sigma = false;
  bool have_center = false;
  bool have_header = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line.starts_with("# seed=")) {
      const auto v = line.substr(7);
      auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), ens.seed);
      if (ec != std::errc() || ptr != v.data() + v.size()) {
        throw Error(ErrorKind::Config, "ensemble CSV: bad seed");
      }
      have_seed = true;
    } else if (line.starts_with("# sigma=")) {
      ens.sigma = parse_double(line.substr(8), "sigma");
      have_sigma = true;
    } else if (line.starts_with("# center=")) {
      ens.true_center = parse_double(line.substr(9), "center");
      have_center = true;
    } else if (line.starts_with("#")) {
      continue;
    } else if (!have_header) {
      if (line != "outcome") throw Error(ErrorKind::Config, "ensemble CSV: expected 'outcome' header");
      have_header = true;
    } else {
      ens.samples.push_back(parse_double(line, "outcome"));
    }
  }
  if (!have_seed || !have_sigma || !have_center || !have_header) {
    throw Error(ErrorKind::Config, "ensemble CSV: missing seed/sigma/center header");
  }
  if (ens.samples.size() < 2) throw Error(ErrorKind::InvalidCount, "ensemble CSV: fewer than 2 outcomes");
  return ens;
}

}  // namespace speclimit::noise
