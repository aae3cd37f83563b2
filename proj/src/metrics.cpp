#include "twinbeam/metrics.hpp"

#include <cmath>
#include <stdexcept>

#include "twinbeam/errors.hpp"

namespace twinbeam {

namespace {

constexpr double kBrightThreshold = 100.0;

GaussianState apply_detection(const GaussianState& state, const DetectionSpec& det) {
  if (det.eta_probe <= 0.0 || det.eta_probe > 1.0 ||
      det.eta_conj <= 0.0 || det.eta_conj > 1.0) {
    throw std::invalid_argument("detection efficiencies must lie in (0,1]");
  }
  return attenuate(attenuate(state, kProbe, det.eta_probe), kConjugate, det.eta_conj);
}

}  // namespace

DifferenceNoise linearized_difference_noise(const GaussianState& state) {
  if (state.n_modes() != 2) {
    throw std::invalid_argument(
        "linearized_difference_noise: state must have exactly 2 modes");
  }
  const Eigen::VectorXd& m = state.mean;
  Eigen::Vector4d w;
  w << m(0) / 2.0, m(1) / 2.0, -m(2) / 2.0, -m(3) / 2.0;
  DifferenceNoise proj;
  proj.variance = w.dot(state.cov.topLeftCorner<4, 4>() * w);
  proj.n_probe = (m(0) * m(0) + m(1) * m(1)) / 4.0;
  proj.n_conj = (m(2) * m(2) + m(3) * m(3)) / 4.0;
  return proj;
}

SqueezingResult intensity_difference_squeezing(const GaussianState& state,
                                               const DetectionSpec& det) {
  if (state.n_modes() != 2) {
    throw std::invalid_argument(
        "intensity_difference_squeezing: state must have exactly 2 modes");
  }
  const GaussianState detected = apply_detection(state, det);
  const DifferenceNoise proj = linearized_difference_noise(detected);
  const double snl = proj.n_probe + proj.n_conj;
  if (proj.n_probe < kBrightThreshold && proj.n_conj < kBrightThreshold) {
    throw std::invalid_argument(
        "intensity_difference_squeezing: both beams dark; linearization invalid");
  }
  SqueezingResult result;
  result.s_linear = proj.variance / snl;
  result.s_db = to_db(result.s_linear);
  result.p_probe = mean_photon(detected, kProbe);
  result.p_conj = mean_photon(detected, kConjugate);
  return result;
}

double single_beam_noise(const GaussianState& state, ModeIndex mode,
                         const DetectionSpec& det) {
  const GaussianState detected = apply_detection(state, det);
  const int i = 2 * (mode.value - 1);
  if (i < 0 || i + 1 >= detected.mean.size()) {
    throw std::invalid_argument("single_beam_noise: mode index out of range");
  }
  const double mx = detected.mean(i);
  const double mp = detected.mean(i + 1);
  const double norm = std::hypot(mx, mp);
  if (norm * norm / 4.0 < kBrightThreshold) {
    throw std::invalid_argument("single_beam_noise: mode is dark");
  }
  Eigen::Vector2d u(mx / norm, mp / norm);
  const Eigen::Matrix2d block = detected.cov.block<2, 2>(i, i);
  return u.dot(block * u);
}

double to_db(double s_linear) {
  if (s_linear <= 0.0) {
    throw std::invalid_argument("to_db: input must be > 0");
  }
  return 10.0 * std::log10(s_linear);
}

std::vector<std::pair<double, double>> snl_curve(const std::vector<double>& powers) {
  std::vector<std::pair<double, double>> curve;
  curve.reserve(powers.size());
  for (double p : powers) {
    if (p < 0.0) throw std::invalid_argument("snl_curve: powers must be >= 0");
    // Coherent sqrt(P) split 50/50: two coherent beams of P/2 each, vacuum
    // covariance. The linearized difference noise is evaluated directly so
    // that P = 0 is a valid point.
    GaussianState state = vacuum(2);
    state = displace(state, kProbe, 2.0 * std::sqrt(p / 2.0), 0.0);
    state = displace(state, kConjugate, 2.0 * std::sqrt(p / 2.0), 0.0);
    curve.emplace_back(p, linearized_difference_noise(state).variance);
  }
  return curve;
}

}  // namespace twinbeam
