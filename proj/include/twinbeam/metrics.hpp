#ifndef TWINBEAM_METRICS_HPP
#define TWINBEAM_METRICS_HPP

#include <utility>
#include <vector>

#include "twinbeam/gaussian_state.hpp"

namespace twinbeam {

// Per-arm detection efficiencies applied before balanced photodetection.
struct DetectionSpec {
  double eta_probe = 1.0;
  double eta_conj = 1.0;
};

struct SqueezingResult {
  double s_linear;  // Var(N_a - N_b) / SNL
  double s_db;      // 10 log10(s_linear)
  double p_probe;   // mean detected photon number, probe arm
  double p_conj;
};

// Linearized photon-number-difference noise of a two-mode state, before any
// detection loss and without the brightness gate. variance = w' cov w with
// w = (<x_a>, <p_a>, -<x_b>, -<p_b>)/2; n_* are the mean-field photon numbers.
struct DifferenceNoise {
  double variance;
  double n_probe;
  double n_conj;
};
DifferenceNoise linearized_difference_noise(const GaussianState& state);

// Relative intensity-difference noise of a bright two-mode state under the
// given detection efficiencies. Uses the linearized bright-beam projection:
// with w = (<x_a>, <p_a>, -<x_b>, -<p_b>)/2,
//   S = w' cov w / (N_a + N_b),  N = (<x>^2 + <p>^2)/4.
// SNL corresponds to S = 1. Requires at least one bright beam (N >= 100).
SqueezingResult intensity_difference_squeezing(const GaussianState& state,
                                               const DetectionSpec& det);

// Amplitude-quadrature variance of one detected beam along its mean-field
// direction, i.e. its intensity noise relative to its own shot noise.
double single_beam_noise(const GaussianState& state, ModeIndex mode,
                         const DetectionSpec& det);

double to_db(double s_linear);

// Shot-noise linearity curve: for each power P, the difference-noise power of
// a coherent beam of mean photon number P split on a balanced 50/50
// beamsplitter. Exactly linear through the origin.
std::vector<std::pair<double, double>> snl_curve(const std::vector<double>& powers);

}  // namespace twinbeam

#endif
