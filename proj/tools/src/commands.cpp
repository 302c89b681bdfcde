#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "speclimit/criterion.hpp"
#include "speclimit/error.hpp"
#include "speclimit/measurement.hpp"
#include "speclimit/model_json.hpp"
#include "speclimit/noise.hpp"
#include "speclimit/numeric_format.hpp"
#include "speclimit/semiclassical.hpp"
#include "speclimit/version.hpp"

namespace speclimit::cli {

namespace {

using nlohmann::json;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json opt(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

OutputFile spectrum_csv(const RunConfig& c) {
  const NRange r = effective_range(c, Command::Spectrum);
  const int maslov =
      c.levels.maslov >= 0 ? c.levels.maslov : semiclassical::default_maslov(c.model);
  std::ostringstream os;
  os << "n,E_n,tau_n";
  if (c.semiclassical_column) os << ",E_n_semiclassical,tau_n_semiclassical";
  os << '\n';
  for (int n = r.first; n <= r.last; ++n) {
    const auto p = criterion::level_point(c.model, n, c.levels);
    os << n << ',' << fmt12(p.energy) << ',' << fmt12(p.tau);
    if (c.semiclassical_column) {
      const double e = semiclassical::quantize(c.model, n, maslov).energy;
      os << ',' << fmt12(e) << ',' << fmt12(semiclassical::period_of_energy(c.model, e).tau);
    }
    os << '\n';
  }
  return {"spectrum.csv", os.str()};
}

criterion::ResolvabilityReport criterion_report(const RunConfig& c) {
  const NRange r = effective_range(c, Command::Criterion);
  return criterion::classify(c.model, r.first, r.last, c.levels);
}

void append_criterion(const criterion::ResolvabilityReport& report, std::vector<OutputFile>& out) {
  out.push_back({"criterion.csv", criterion::report_csv(report)});
  out.push_back({"criterion.json", dump(criterion::report_json(report))});
  out.push_back({"criterion_plot.csv", criterion::plot_data_csv(report)});
}

sim::Sweep sweep(const RunConfig& c) {
  const NRange r = effective_range(c, Command::Simulate);
  return sim::consistency_sweep(c.model, r.first, r.last, c.protocol);
}

struct Resolution {
  std::string csv;
  double max_product = 0.0;
  bool all_below_sql = true;
};

Resolution noise_resolution(const RunConfig& c) {
  Resolution res;
  std::ostringstream os;
  os << "n,E_n,required_product_over_hbar,below_sql\n";
  for (int n = 0; n <= c.noise.levels; ++n) {
    const double product = noise::required_noise_product_for_resolution(c.model, n);
    const bool below = product < 0.5;
    res.max_product = std::max(res.max_product, product);
    res.all_below_sql = res.all_below_sql && below;
    os << n << ',' << fmt12(energy_level(c.model, n).energy) << ',' << fmt12(product) << ','
       << (below ? "true" : "false") << '\n';
  }
  res.csv = os.str();
  return res;
}

json resolution_json(const Resolution& r, int levels) {
  return {{"levels", levels},
          {"max_required_product_over_hbar", round12(r.max_product)},
          {"all_below_sql", r.all_below_sql}};
}

std::vector<OutputFile> noise_files(const RunConfig& c) {
  const double hbar = c.model.hbar();
  const double dx = c.noise.delta_x.value_or(std::sqrt(hbar / 2.0));
  const double dp = c.noise.delta_p.value_or(std::sqrt(hbar / 2.0));
  const auto budget = noise::NoiseBudget::make(dx, dp, hbar);
  const auto position = noise::sample_ensemble(c.noise.center, dx, c.noise.samples, c.seed, 0);
  const auto momentum = noise::sample_ensemble(0.0, dp, c.noise.samples, c.seed, 1);
  const auto state = noise::reconstruct_state(position, momentum, hbar);

  std::ostringstream cf;
  cf << "p_dx_over_hbar,p,mc_real,mc_imag,se_real,se_imag,exact,within_3se\n";
  int within = 0;
  for (double k : c.noise.momenta) {
    const double p = k * hbar / dx;
    const auto est = noise::ensemble_characteristic(position, p, hbar);
    const double exact = noise::characteristic_factor(dx, p, hbar);
    const bool ok = std::abs(est.real - exact) <= 3.0 * est.standard_error_real &&
                    std::abs(est.imag) <= 3.0 * est.standard_error_imag;
    within += ok ? 1 : 0;
    cf << fmt12(k) << ',' << fmt12(p) << ',' << fmt12(est.real) << ',' << fmt12(est.imag) << ','
       << fmt12(est.standard_error_real) << ',' << fmt12(est.standard_error_imag) << ','
       << fmt12(exact) << ',' << (ok ? "true" : "false") << '\n';
  }

  json summary = {
      {"hbar", round12(hbar)},
      {"budget",
       {{"delta_x", round12(dx)},
        {"delta_p", round12(dp)},
        {"product_over_hbar", round12(budget.product_over_hbar)},
        {"preparable", budget.preparable()}}},
      {"reconstruction",
       {{"r", round12(state.r)},
        {"d", round12(state.d)},
        {"delta_x", round12(state.delta_x)},
        {"delta_p", round12(state.delta_p)},
        {"product_over_hbar", round12(state.product_over_hbar)},
        {"sub_sql", state.sub_sql},
        {"normalization", round12(state.position_normalization())}}},
      {"characteristic", {{"points", c.noise.momenta.size()}, {"within_3se", within}}},
      {"samples", c.noise.samples},
      {"seed", c.seed}};

  std::vector<OutputFile> out;
  out.push_back({"position_ensemble.csv", noise::ensemble_csv(position)});
  out.push_back({"momentum_ensemble.csv", noise::ensemble_csv(momentum)});
  out.push_back({"characteristic.csv", cf.str()});
  if (c.model.kind() == ModelKind::Harmonic) {
    const Resolution res = noise_resolution(c);
    out.push_back({"noise_resolution.csv", res.csv});
    summary["resolution"] = resolution_json(res, c.noise.levels);
  } else {
    summary["resolution"] = nullptr;
  }
  out.push_back({"noise.json", dump(summary)});
  return out;
}

std::vector<OutputFile> report_files(const RunConfig& c) {
  std::vector<OutputFile> out;
  out.push_back(spectrum_csv(c));
  const auto report = criterion_report(c);
  append_criterion(report, out);

  double max_y = 0.0;
  for (const auto& g : report.gaps) max_y = std::max(max_y, g.y_over_hbar);
  json summary = {{"toolkit_version", kToolkitVersion},
                  {"model", model_to_json(c.model)},
                  {"criterion",
                   {{"threshold", opt(report.threshold)},
                    {"regime", std::string(criterion::to_string(report.regime))},
                    {"max_y_over_hbar", round12(max_y)},
                    {"crossings", report.crossings},
                    {"notes", report.notes}}}};

  if (c.model.kind() == ModelKind::Harmonic) {
    summary["simulation"] = {{"skipped", std::string(criterion::kPeriodDegenerateNote)}};
    const Resolution res = noise_resolution(c);
    out.push_back({"noise_resolution.csv", res.csv});
    summary["noise"] = resolution_json(res, c.noise.levels);
  } else {
    const auto s = sweep(c);
    out.push_back({"sweep.csv", sim::sweep_csv(s)});
    out.push_back({"sweep.json", dump(sim::sweep_json(s))});
    const auto sj = sim::sweep_json(s);
    summary["simulation"] = {{"mc_crossover", sj["mc_crossover"]},
                             {"criterion_threshold", sj["criterion_threshold"]},
                             {"crossover_agrees", sj["crossover_agrees"]},
                             {"mc_resolvable_pairs", sj["mc_resolvable_pairs"]},
                             {"expected", sj["expected"]}};
    summary["noise"] = nullptr;
  }
  out.push_back({"report.json", dump(summary)});
  return out;
}

}  // namespace

std::vector<OutputFile> run_command(Command command, const RunConfig& config) {
  switch (command) {
    case Command::Spectrum: return {spectrum_csv(config)};
    case Command::Criterion: {
      std::vector<OutputFile> out;
      append_criterion(criterion_report(config), out);
      return out;
    }
    case Command::Noise: return noise_files(config);
    case Command::Simulate: {
      const auto s = sweep(config);
      return {{"sweep.csv", sim::sweep_csv(s)}, {"sweep.json", dump(sim::sweep_json(s))}};
    }
    case Command::Report: return report_files(config);
  }
  throw Error(ErrorKind::Config, "unknown command");
}

}  // namespace speclimit::cli
