#ifndef TWINBEAM_ANALYSIS_HPP
#define TWINBEAM_ANALYSIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "twinbeam/media.hpp"

namespace twinbeam {

enum class Model { BS, DGL };

std::string model_name(Model model);

struct SweepSpec {
  Model model = Model::DGL;
  double g_start = 1.0;
  double g_stop = 4.0;
  double g_step = 0.02;
  std::vector<double> t_values;
  double eta = 0.5;
  int slices = 2000;  // DGL only
};

struct SweepRow {
  Model model;
  double g;
  double t;
  double eta;
  double s_linear;
  double s_db;
};

struct OptimumResult {
  double g_star;
  double s_star;
  bool at_boundary;  // minimum sits at g_max rather than in the interior
};

struct TransmissionOptimum {
  double t_star;
  double s_star;
};

// Minimizes S(g) over [1, g_max]: 64-point coarse scan, then golden-section
// refinement to |dg| <= 1e-4. For the BS model eta plays the role of eta_b.
OptimumResult optimal_gain(double t, double eta, Model model,
                           double g_max = 10.0, int slices = 2000);

// Gain at which S crosses 1. For the BS model this is the analytic root
// g = 1/(1-t)^2 (eta-independent); for DGL the crossing is located by
// sign-change bracketing + bisection to 1e-6. nullopt when no crossing lies
// in (1, g_max].
std::optional<double> squeezing_threshold_gain(double t, double eta, Model model,
                                               double g_max = 10.0,
                                               int slices = 2000);

// Minimizes S_BS over t in (0,1] for fixed g. The optimum is strictly
// interior (t_star < 1) for any g > 1.
TransmissionOptimum optimal_probe_transmission_bs(double g, double eta_b);

// Evaluates the selected model over the grid; rows ordered by (t, then g).
std::vector<SweepRow> sweep(const SweepSpec& spec);

// CSV serialization with header `model,g,t,eta,s_linear,s_db` and values at
// 9 significant digits; final row newline-terminated.
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

}  // namespace twinbeam

#endif
