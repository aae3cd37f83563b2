#include "twinbeam/media.hpp"

#include <cmath>
#include <stdexcept>

#include "twinbeam/errors.hpp"
#include "twinbeam/metrics.hpp"
#include "twinbeam/numeric.hpp"

namespace twinbeam {

namespace {

void check_operating_point(double g, double t, double eta) {
  if (g < 1.0) throw std::invalid_argument("gain g must be >= 1");
  if (t <= 0.0 || t > 1.0) throw std::invalid_argument("transmission t must lie in (0,1]");
  if (eta <= 0.0 || eta > 1.0) throw std::invalid_argument("efficiency must lie in (0,1]");
}

}  // namespace

double bs_model_squeezing(const OperatingPoint& op) {
  check_operating_point(op.g, op.t, op.eta);
  const double denom = op.g * (op.t + 1.0) - 1.0;
  if (denom <= 0.0) {
    // Cannot occur for g >= 1, t > 0; guarded anyway.
    throw std::invalid_argument("bs_model_squeezing: degenerate denominator");
  }
  const double bracket = op.g * (op.t - 1.0) * (op.t - 1.0) - 1.0;
  return 1.0 + op.eta * 2.0 * (op.g - 1.0) * bracket / denom;
}

double pure_gain_squeezing(double g, double eta) {
  check_operating_point(g, 1.0, eta);
  return 1.0 - eta + eta / (2.0 * g - 1.0);
}

std::pair<double, double> mean_field_transfer(const MediumParams& medium) {
  // d/dz (u, v) = M (u, v) with M = [[-alpha/2, gamma], [gamma, 0]], z in [0,1];
  // u is the probe amplitude, v the conjugate (conjugated) amplitude.
  // exp(M) = e^m (cosh(s) I + sinh(s)/s (M - m I)), m = -alpha/4,
  // s = sqrt(m^2 + gamma^2).
  const double a = medium.alpha_l;
  const double gl = medium.gamma_l;
  const double m = -a / 4.0;
  const double s = std::sqrt(m * m + gl * gl);
  const double sinhc = (s < 1e-12) ? 1.0 : std::sinh(s) / s;
  const double em = std::exp(m);
  const double u = em * (std::cosh(s) + sinhc * (-a / 2.0 - m));
  const double v = em * sinhc * gl;
  return {u * u, v * v};
}

MediumParams calibrate_dgl(double g, double t) {
  check_operating_point(g, t, 1.0);
  MediumParams medium;
  medium.alpha_l = -std::log(t);
  if (g == 1.0) {
    medium.gamma_l = 0.0;
    return medium;
  }
  const double target = g - 1.0;
  auto excess = [&](double gl) {
    return mean_field_transfer({gl, medium.alpha_l}).second - target;
  };
  double hi = 1.0;
  int doublings = 0;
  while (excess(hi) < 0.0) {
    hi *= 2.0;
    if (++doublings > 60) {
      throw ConvergenceError("calibrate_dgl: failed to bracket gamma_l");
    }
  }
  medium.gamma_l = bisect_root(excess, 0.0, hi, 1e-14 * hi);
  if (std::abs(excess(medium.gamma_l)) > 1e-9) {
    throw ConvergenceError("calibrate_dgl: residual above tolerance");
  }
  return medium;
}

MediumParams medium_from_intrinsic_gain(double g, double t) {
  check_operating_point(g, t, 1.0);
  return {std::acosh(std::sqrt(g)), -std::log(t)};
}

GaussianState propagate_dgl(const GaussianState& state,
                            const MediumParams& medium, int slices) {
  if (slices < 1) throw std::invalid_argument("propagate_dgl: slices must be >= 1");
  if (state.n_modes() < 2) {
    throw std::invalid_argument("propagate_dgl: state needs >= 2 modes");
  }
  // One Strang slice is the affine Gaussian map
  //   mean -> M mean,  cov -> M cov M' + D
  // with M = L S L (half probe loss, squeeze, half probe loss) and D the
  // accumulated vacuum noise of the two loss half-steps. The N-slice
  // composition is accumulated on 4x4 matrices and applied to the state once.
  const double r = medium.gamma_l / slices;
  const double tau_half = std::exp(-medium.alpha_l / (2.0 * slices));
  const double rt = std::sqrt(tau_half);
  const double c = std::cosh(r);
  const double sh = std::sinh(r);

  Eigen::Matrix4d squeezer;
  squeezer << c, 0, sh, 0,
              0, c, 0, -sh,
              sh, 0, c, 0,
              0, -sh, 0, c;
  Eigen::Matrix4d half = Eigen::Matrix4d::Identity();
  half(0, 0) = half(1, 1) = rt;
  Eigen::Matrix4d noise_half = Eigen::Matrix4d::Zero();
  noise_half(0, 0) = noise_half(1, 1) = 1.0 - tau_half;

  const Eigen::Matrix4d slice_map = half * squeezer * half;
  const Eigen::Matrix4d slice_noise =
      half * squeezer * noise_half * squeezer.transpose() * half.transpose() +
      noise_half;

  Eigen::Matrix4d map = Eigen::Matrix4d::Identity();
  Eigen::Matrix4d noise = Eigen::Matrix4d::Zero();
  for (int k = 0; k < slices; ++k) {
    map = slice_map * map;
    noise = slice_map * noise * slice_map.transpose() + slice_noise;
  }

  const int dim = static_cast<int>(state.mean.size());
  Eigen::MatrixXd full_map = Eigen::MatrixXd::Identity(dim, dim);
  full_map.topLeftCorner<4, 4>() = map;
  GaussianState out;
  out.mean = full_map * state.mean;
  out.cov = full_map * state.cov * full_map.transpose();
  out.cov.topLeftCorner<4, 4>() += noise;
  return out;
}

double squeezing_from_medium(const MediumParams& medium, double eta,
                             int slices, const SeedSpec& seed) {
  if (seed.alpha_sq <= 0.0) throw std::invalid_argument("seed power must be > 0");
  GaussianState state = vacuum(2);
  state = displace(state, kProbe, 2.0 * std::sqrt(seed.alpha_sq), 0.0);
  state = propagate_dgl(state, medium, slices);
  return intensity_difference_squeezing(state, {eta, eta}).s_linear;
}

double dgl_model_squeezing(double g, double t, double eta, int slices,
                           const SeedSpec& seed) {
  check_operating_point(g, t, eta);
  const MediumParams medium = medium_from_intrinsic_gain(g, t);
  const double coarse = squeezing_from_medium(medium, eta, slices, seed);
  const double fine = squeezing_from_medium(medium, eta, 2 * slices, seed);
  if (std::abs(fine - coarse) >= 1e-6) {
    throw ConvergenceError("dgl_model_squeezing: slices too coarse");
  }
  return fine;
}

FitResult fit_from_outputs(double probe_out_norm, double conj_out_norm) {
  if (probe_out_norm <= 0.0) {
    throw std::invalid_argument("fit_from_outputs: probe output must be > 0");
  }
  if (conj_out_norm < 0.0) {
    throw std::invalid_argument("fit_from_outputs: conjugate output must be >= 0");
  }
  FitResult fit;
  fit.g = 1.0 + conj_out_norm;
  fit.overall_gain = probe_out_norm + conj_out_norm;

  auto probe_residual = [&](double t) {
    return mean_field_transfer(calibrate_dgl(fit.g, t)).first - probe_out_norm;
  };
  const double t_lo = 1e-9;
  const double t_hi = 1.0;
  const double res_hi = probe_residual(t_hi);
  const double res_lo = probe_residual(t_lo);
  if (std::abs(res_hi) <= 1e-9) {
    fit.t = t_hi;  // boundary solution: transparent medium
  } else if (res_hi < 0.0 || res_lo > 0.0) {
    throw InfeasibleError(
        "fit_from_outputs: no transmission in (0,1] reproduces the probe output");
  } else {
    fit.t = bisect_root(probe_residual, t_lo, t_hi, 1e-14);
  }
  fit.medium = calibrate_dgl(fit.g, fit.t);
  if (std::abs(mean_field_transfer(fit.medium).first - probe_out_norm) > 1e-9) {
    throw ConvergenceError("fit_from_outputs: residual above tolerance");
  }
  return fit;
}

}  // namespace twinbeam
