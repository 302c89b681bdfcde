#include <cmath>
#include <cstdlib>
#include <sstream>

#include <fmt/format.h>

#include "speclimit/criterion.hpp"
#include "speclimit/model_json.hpp"
#include "speclimit/numeric_format.hpp"

namespace speclimit {

std::string fmt12(double value) {
  if (value == 0.0) return "0";  // no negative zero in outputs
  return fmt::format("{:.12g}", value);
}

double round12(double value) {
  if (!std::isfinite(value)) return value;
  return std::strtod(fmt12(value).c_str(), nullptr);
}

namespace criterion {

std::string report_csv(const ResolvabilityReport& report) {
  std::ostringstream os;
  os << "n,E_n,tau_n,dE,dTau,y_over_hbar,resolvable\n";
  for (const LevelGap& g : report.gaps) {
    os << g.n << ',' << fmt12(g.energy_n) << ',' << fmt12(g.tau_n) << ',' << fmt12(g.dE) << ','
       << fmt12(g.dTau) << ',' << fmt12(g.y_over_hbar) << ',' << (g.resolvable ? "true" : "false")
       << '\n';
  }
  return os.str();
}

std::string plot_data_csv(const ResolvabilityReport& report) {
  std::ostringstream os;
  os << "n,y_over_hbar,reference\n";
  for (const LevelGap& g : report.gaps) {
    os << g.n << ',' << fmt12(g.y_over_hbar) << ",0.5\n";
  }
  return os.str();
}

nlohmann::json report_json(const ResolvabilityReport& report) {
  nlohmann::json gaps = nlohmann::json::array();
  double y_max = 0.0;
  for (const LevelGap& g : report.gaps) {
    y_max = std::max(y_max, g.y_over_hbar);
    gaps.push_back({{"n", g.n},
                    {"E_n", round12(g.energy_n)},
                    {"tau_n", round12(g.tau_n)},
                    {"dE", round12(g.dE)},
                    {"dTau", round12(g.dTau)},
                    {"y_over_hbar", round12(g.y_over_hbar)},
                    {"resolvable", g.resolvable},
                    {"period_degenerate", g.period_degenerate}});
  }
  nlohmann::json ratios = nlohmann::json::array();
  for (const auto& [n, r] : report.ratio_series) ratios.push_back({{"n", n}, {"ratio", round12(r)}});
  nlohmann::json out;
  out["model"] = model_to_json(report.model);
  out["source"] = report.source == LevelSource::Semiclassical ? "semiclassical" : "closed-form";
  out["threshold"] = report.threshold ? nlohmann::json(*report.threshold) : nlohmann::json(nullptr);
  out["regime"] = std::string(to_string(report.regime));
  out["crossings"] = report.crossings;
  out["monotone_tail"] = report.monotone_tail;
  out["max_y_over_hbar"] = round12(y_max);
  out["notes"] = report.notes;
  out["gaps"] = std::move(gaps);
  out["ratio_series"] = std::move(ratios);
  return out;
}

}  // namespace criterion

}  // namespace speclimit
