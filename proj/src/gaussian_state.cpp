#include "twinbeam/gaussian_state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "twinbeam/errors.hpp"

namespace twinbeam {

namespace {

int checked_index(const GaussianState& state, ModeIndex mode) {
  if (mode.value < 1 || mode.value > state.n_modes()) {
    throw std::invalid_argument("mode index out of range");
  }
  return 2 * (mode.value - 1);
}

}  // namespace

GaussianState vacuum(int n_modes) {
  if (n_modes < 1) {
    throw std::invalid_argument("vacuum: n_modes must be >= 1");
  }
  GaussianState s;
  s.mean = Eigen::VectorXd::Zero(2 * n_modes);
  s.cov = Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes);
  return s;
}

GaussianState displace(const GaussianState& state, ModeIndex mode,
                       double amp_x, double amp_p) {
  const int i = checked_index(state, mode);
  GaussianState out = state;
  out.mean(i) += amp_x;
  out.mean(i + 1) += amp_p;
  return out;
}

GaussianState two_mode_squeeze(const GaussianState& state, double r,
                               ModeIndex mode_a, ModeIndex mode_b) {
  if (mode_a.value == mode_b.value) {
    throw std::invalid_argument("two_mode_squeeze: modes must be distinct");
  }
  if (r < 0) {
    throw std::invalid_argument("two_mode_squeeze: r must be >= 0");
  }
  const int ia = checked_index(state, mode_a);
  const int ib = checked_index(state, mode_b);
  const int dim = static_cast<int>(state.mean.size());
  const double c = std::cosh(r);
  const double sh = std::sinh(r);

  Eigen::MatrixXd S = Eigen::MatrixXd::Identity(dim, dim);
  S(ia, ia) = c;
  S(ia, ib) = sh;
  S(ia + 1, ia + 1) = c;
  S(ia + 1, ib + 1) = -sh;
  S(ib, ib) = c;
  S(ib, ia) = sh;
  S(ib + 1, ib + 1) = c;
  S(ib + 1, ia + 1) = -sh;

  GaussianState out;
  out.mean = S * state.mean;
  out.cov = S * state.cov * S.transpose();
  return out;
}

GaussianState attenuate(const GaussianState& state, ModeIndex mode, double tau) {
  if (tau < 0.0 || tau > 1.0) {
    throw std::invalid_argument("attenuate: tau must lie in [0,1]");
  }
  const int i = checked_index(state, mode);
  const double rt = std::sqrt(tau);

  GaussianState out = state;
  out.mean(i) *= rt;
  out.mean(i + 1) *= rt;
  // Scale the mode's rows and columns by sqrt(tau), then add vacuum noise
  // (1 - tau) on the diagonal block.
  out.cov.row(i) *= rt;
  out.cov.row(i + 1) *= rt;
  out.cov.col(i) *= rt;
  out.cov.col(i + 1) *= rt;
  out.cov(i, i) += 1.0 - tau;
  out.cov(i + 1, i + 1) += 1.0 - tau;
  return out;
}

std::vector<double> symplectic_eigenvalues(const GaussianState& state) {
  const Eigen::MatrixXd& cov = state.cov;
  const int dim = static_cast<int>(cov.rows());
  const double scale = std::max(1.0, cov.cwiseAbs().maxCoeff());
  if ((cov - cov.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw std::invalid_argument(
        "symplectic_eigenvalues: covariance is not symmetric");
  }

  // Eigenvalues of Omega*cov come in pairs +/- i*nu with nu the symplectic
  // eigenvalues; Omega is block-diagonal [[0,1],[-1,0]] in (x,p) ordering.
  Eigen::MatrixXd omega_cov(dim, dim);
  for (int m = 0; m < dim / 2; ++m) {
    omega_cov.row(2 * m) = cov.row(2 * m + 1);
    omega_cov.row(2 * m + 1) = -cov.row(2 * m);
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(omega_cov, /*computeEigenvectors=*/false);

  std::vector<double> nus;
  for (int k = 0; k < dim; ++k) {
    const double im = solver.eigenvalues()(k).imag();
    if (im > 0) nus.push_back(im);
  }
  std::sort(nus.begin(), nus.end());
  if (static_cast<int>(nus.size()) != dim / 2) {
    throw ConvergenceError("symplectic_eigenvalues: spectrum did not pair up");
  }
  return nus;
}

double mean_photon(const GaussianState& state, ModeIndex mode) {
  const int i = checked_index(state, mode);
  const double mx = state.mean(i);
  const double mp = state.mean(i + 1);
  const double vsum = state.cov(i, i) + state.cov(i + 1, i + 1);
  return (mx * mx + mp * mp) / 4.0 + (vsum - 2.0) / 4.0;
}

}  // namespace twinbeam
