#include "twinbeam/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>

#include "twinbeam/numeric.hpp"

namespace twinbeam {

namespace {

constexpr int kCoarsePoints = 64;
constexpr double kGainTol = 1e-4;
constexpr double kThresholdTol = 1e-6;

std::function<double(double)> gain_objective(double t, double eta, Model model,
                                             int slices) {
  if (model == Model::BS) {
    return [t, eta](double g) { return bs_model_squeezing({g, t, eta}); };
  }
  return [t, eta, slices](double g) {
    return squeezing_from_medium(medium_from_intrinsic_gain(g, t), eta, slices);
  };
}

}  // namespace

std::string model_name(Model model) {
  return model == Model::BS ? "bs" : "dgl";
}

OptimumResult optimal_gain(double t, double eta, Model model, double g_max,
                           int slices) {
  if (t <= 0.0 || t >= 1.0) {
    throw std::invalid_argument("optimal_gain: t must lie in (0,1)");
  }
  if (g_max < 1.0) throw std::invalid_argument("optimal_gain: g_max must be >= 1");
  const auto objective = gain_objective(t, eta, model, slices);

  // Coarse scan to bracket the minimum.
  double best_g = 1.0;
  double best_s = objective(1.0);
  int best_idx = 0;
  for (int k = 1; k < kCoarsePoints; ++k) {
    const double g = 1.0 + (g_max - 1.0) * k / (kCoarsePoints - 1);
    const double s = objective(g);
    if (s < best_s) {
      best_s = s;
      best_g = g;
      best_idx = k;
    }
  }

  OptimumResult result;
  if (best_idx == kCoarsePoints - 1) {
    result.g_star = g_max;
    result.s_star = best_s;
    result.at_boundary = true;
    return result;
  }
  const double spacing = (g_max - 1.0) / (kCoarsePoints - 1);
  const double lo = std::max(1.0, best_g - spacing);
  const double hi = std::min(g_max, best_g + spacing);
  result.g_star = golden_section_minimize(objective, lo, hi, kGainTol);
  result.s_star = objective(result.g_star);
  result.at_boundary = false;
  return result;
}

std::optional<double> squeezing_threshold_gain(double t, double eta, Model model,
                                               double g_max, int slices) {
  if (t <= 0.0 || t >= 1.0) {
    throw std::invalid_argument("squeezing_threshold_gain: t must lie in (0,1)");
  }
  if (model == Model::BS) {
    // Root of the bracket g(t-1)^2 - 1 = 0; independent of eta.
    const double root = 1.0 / ((1.0 - t) * (1.0 - t));
    if (root > g_max) return std::nullopt;
    return root;
  }
  const auto objective = gain_objective(t, eta, model, slices);
  auto excess = [&](double g) { return objective(g) - 1.0; };
  // S -> 1 from below as g -> 1+; look for the first upward crossing.
  double prev_g = 1.0 + 1e-3;
  double prev_f = excess(prev_g);
  for (int k = 1; k < kCoarsePoints; ++k) {
    const double g = prev_g + (g_max - prev_g) * static_cast<double>(k) /
                                 (kCoarsePoints - 1);
    const double f = excess(g);
    if (prev_f < 0.0 && f >= 0.0) {
      return bisect_root(excess, prev_g, g, kThresholdTol);
    }
    prev_g = g;
    prev_f = f;
  }
  return std::nullopt;
}

TransmissionOptimum optimal_probe_transmission_bs(double g, double eta_b) {
  if (g <= 1.0) {
    throw std::invalid_argument("optimal_probe_transmission_bs: g must be > 1");
  }
  auto objective = [g, eta_b](double t) {
    return bs_model_squeezing({g, t, eta_b});
  };
  double best_t = 1.0;
  double best_s = objective(1.0);
  for (int k = 1; k < kCoarsePoints; ++k) {
    const double t = 1.0 - static_cast<double>(k) / kCoarsePoints;
    const double s = objective(t);
    if (s < best_s) {
      best_s = s;
      best_t = t;
    }
  }
  const double spacing = 1.0 / kCoarsePoints;
  const double lo = std::max(spacing / 2.0, best_t - spacing);
  const double hi = std::min(1.0, best_t + spacing);
  TransmissionOptimum result;
  result.t_star = golden_section_minimize(objective, lo, hi, 1e-6);
  result.s_star = objective(result.t_star);
  return result;
}

std::vector<SweepRow> sweep(const SweepSpec& spec) {
  if (spec.t_values.empty()) throw std::invalid_argument("sweep: empty t grid");
  if (spec.g_step <= 0.0) throw std::invalid_argument("sweep: g_step must be > 0");
  if (spec.g_stop < spec.g_start) {
    throw std::invalid_argument("sweep: g_stop must be >= g_start");
  }
  std::vector<SweepRow> rows;
  for (double t : spec.t_values) {
    for (double g = spec.g_start; g <= spec.g_stop + spec.g_step / 2.0;
         g += spec.g_step) {
      SweepRow row;
      row.model = spec.model;
      row.g = g;
      row.t = t;
      row.eta = spec.eta;
      row.s_linear = (spec.model == Model::BS)
                         ? bs_model_squeezing({g, t, spec.eta})
                         : dgl_model_squeezing(g, t, spec.eta, spec.slices);
      row.s_db = 10.0 * std::log10(row.s_linear);
      rows.push_back(row);
    }
  }
  return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::string csv = "model,g,t,eta,s_linear,s_db\n";
  char buf[160];
  for (const SweepRow& row : rows) {
    std::snprintf(buf, sizeof(buf), "%s,%.9g,%.9g,%.9g,%.9g,%.9g\n",
                  model_name(row.model).c_str(), row.g, row.t, row.eta,
                  row.s_linear, row.s_db);
    csv += buf;
  }
  return csv;
}

}  // namespace twinbeam
