#include "twinbeam/fock_oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

#include "twinbeam/errors.hpp"
#include "twinbeam/metrics.hpp"

namespace twinbeam {

namespace {

constexpr double kSeedLeakTol = 1e-8;
constexpr double kSqueezeLeakTol = 1e-6;

void check_cutoff(int cutoff) {
  if (cutoff < 2 || cutoff > kMaxFockCutoff) {
    throw std::invalid_argument("fock cutoff must lie in [2, 64]");
  }
}

int mode_offset(const FockState& state, ModeIndex mode) {
  if (mode.value != 1 && mode.value != 2) {
    throw std::invalid_argument("fock mode must be 1 or 2");
  }
  (void)state;
  return mode.value;
}

// sqrt(C(n,k) tau^(n-k) (1-tau)^k); pow(0,0) = 1 covers tau in {0,1}.
double kraus_coeff(int n, int k, double tau) {
  const double log_choose =
      std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
  return std::exp(0.5 * log_choose) * std::pow(tau, (n - k) / 2.0) *
         std::pow(1.0 - tau, k / 2.0);
}

// Probability currently sitting on the truncation boundary (n = cutoff-1 in
// either mode).
double boundary_population(const FockState& state) {
  const int c = state.cutoff;
  double pop = 0.0;
  for (int nb = 0; nb < c; ++nb) {
    pop += state.rho((c - 1) * c + nb, (c - 1) * c + nb).real();
  }
  for (int na = 0; na + 1 < c; ++na) {
    pop += state.rho(na * c + (c - 1), na * c + (c - 1)).real();
  }
  return pop;
}

}  // namespace

FockState fock_seed(double alpha, int cutoff) {
  check_cutoff(cutoff);
  if (alpha < 0.0) throw std::invalid_argument("fock_seed: alpha must be >= 0");

  Eigen::VectorXd amp = Eigen::VectorXd::Zero(cutoff);
  if (alpha == 0.0) {
    amp(0) = 1.0;
  } else {
    for (int n = 0; n < cutoff; ++n) {
      amp(n) = std::exp(-alpha * alpha / 2.0 + n * std::log(alpha) -
                        0.5 * std::lgamma(n + 1.0));
    }
    const double norm_sq = amp.squaredNorm();
    if (1.0 - norm_sq > kSeedLeakTol) {
      throw TruncationError("fock_seed: cutoff too small for requested alpha");
    }
    amp /= std::sqrt(norm_sq);
  }

  // |alpha> on the probe, vacuum on the conjugate (n_b = 0 column).
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(cutoff * cutoff);
  for (int n = 0; n < cutoff; ++n) psi(n * cutoff) = amp(n);

  FockState state;
  state.cutoff = cutoff;
  state.rho = psi * psi.adjoint();
  return state;
}

FockState fock_two_mode_squeeze(const FockState& state, double r) {
  const int c = state.cutoff;
  const int dim = c * c;

  FockState out;
  out.cutoff = c;
  out.rho = state.rho;

  // The generator conserves n_a - n_b; within the sector d = n_a - n_b with
  // basis |n+max(d,0), n+max(-d,0)> it is real antisymmetric tridiagonal, so
  // each sector exponential is a small real orthogonal matrix.
  for (int d = -(c - 1); d <= c - 1; ++d) {
    const int size = c - std::abs(d);
    if (size < 2) continue;
    Eigen::MatrixXd gen = Eigen::MatrixXd::Zero(size, size);
    std::vector<int> idx(size);
    for (int n = 0; n < size; ++n) {
      const int na = n + std::max(d, 0);
      const int nb = n + std::max(-d, 0);
      idx[n] = na * c + nb;
      if (n + 1 < size) {
        const double coeff = std::sqrt(double(na + 1) * double(nb + 1));
        gen(n + 1, n) = coeff;
        gen(n, n + 1) = -coeff;
      }
    }
    const Eigen::MatrixXd u = (r * gen).exp();

    // rho -> U rho U^T, restricted to this sector's rows and columns.
    Eigen::MatrixXcd rows(size, dim);
    for (int n = 0; n < size; ++n) rows.row(n) = out.rho.row(idx[n]);
    rows = u * rows;
    for (int n = 0; n < size; ++n) out.rho.row(idx[n]) = rows.row(n);

    Eigen::MatrixXcd cols(dim, size);
    for (int n = 0; n < size; ++n) cols.col(n) = out.rho.col(idx[n]);
    cols = cols * u.transpose();
    for (int n = 0; n < size; ++n) out.rho.col(idx[n]) = cols.col(n);
  }

  if (boundary_population(out) > kSqueezeLeakTol) {
    throw TruncationError(
        "fock_two_mode_squeeze: population reached the truncation boundary");
  }
  return out;
}

FockState fock_loss(const FockState& state, ModeIndex mode, double tau) {
  if (tau < 0.0 || tau > 1.0) {
    throw std::invalid_argument("fock_loss: tau must lie in [0,1]");
  }
  const int which = mode_offset(state, mode);
  const int c = state.cutoff;

  FockState out;
  out.cutoff = c;
  out.rho = Eigen::MatrixXcd::Zero(c * c, c * c);

  for (int k = 0; k < c; ++k) {
    for (int m = 0; m + k < c; ++m) {
      const double cm = kraus_coeff(m + k, k, tau);
      if (cm == 0.0) continue;
      for (int mp = 0; mp + k < c; ++mp) {
        const double coeff = cm * kraus_coeff(mp + k, k, tau);
        if (coeff == 0.0) continue;
        if (which == 1) {
          out.rho.block(m * c, mp * c, c, c) +=
              coeff * state.rho.block((m + k) * c, (mp + k) * c, c, c);
        } else {
          out.rho(Eigen::seqN(m, c, c), Eigen::seqN(mp, c, c)) +=
              coeff * state.rho(Eigen::seqN(m + k, c, c), Eigen::seqN(mp + k, c, c));
        }
      }
    }
  }
  return out;
}

DifferenceStats fock_difference_stats(const FockState& state) {
  const int c = state.cutoff;
  DifferenceStats stats{0.0, 0.0, 0.0};
  double diff_sq = 0.0;
  for (int na = 0; na < c; ++na) {
    for (int nb = 0; nb < c; ++nb) {
      const double p = state.rho(na * c + nb, na * c + nb).real();
      stats.mean_a += p * na;
      stats.mean_b += p * nb;
      diff_sq += p * double(na - nb) * double(na - nb);
    }
  }
  const double mean_diff = stats.mean_a - stats.mean_b;
  stats.var_diff = diff_sq - mean_diff * mean_diff;
  return stats;
}

double fock_mean_photon(const FockState& state, ModeIndex mode) {
  const DifferenceStats stats = fock_difference_stats(state);
  return mode_offset(state, mode) == 1 ? stats.mean_a : stats.mean_b;
}

double fock_trace(const FockState& state) {
  return state.rho.trace().real();
}

double fock_hermiticity_error(const FockState& state) {
  return (state.rho - state.rho.adjoint()).cwiseAbs().maxCoeff();
}

double fock_min_eigenvalue(const FockState& state) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(state.rho);
  return solver.eigenvalues().minCoeff();
}

OracleComparison compare_engines(double alpha, double r, double tau, int cutoff) {
  // Fock side: exact.
  FockState fock = fock_seed(alpha, cutoff);
  fock = fock_two_mode_squeeze(fock, r);
  fock = fock_loss(fock, kProbe, tau);
  const DifferenceStats exact = fock_difference_stats(fock);

  // Gaussian side: linearized.
  GaussianState gauss = vacuum(2);
  gauss = displace(gauss, kProbe, 2.0 * alpha, 0.0);
  gauss = two_mode_squeeze(gauss, r, kProbe, kConjugate);
  gauss = attenuate(gauss, kProbe, tau);
  const DifferenceNoise lin = linearized_difference_noise(gauss);

  OracleComparison cmp;
  cmp.fock_mean_a = exact.mean_a;
  cmp.fock_mean_b = exact.mean_b;
  cmp.gauss_mean_a = mean_photon(gauss, kProbe);
  cmp.gauss_mean_b = mean_photon(gauss, kConjugate);
  cmp.mean_deviation = std::max(
      std::abs(cmp.gauss_mean_a - exact.mean_a) / std::max(1.0, exact.mean_a),
      std::abs(cmp.gauss_mean_b - exact.mean_b) / std::max(1.0, exact.mean_b));

  const double snl_fock = exact.mean_a + exact.mean_b;
  const double snl_gauss = lin.n_probe + lin.n_conj;
  if (snl_fock > 1e-12 && snl_gauss > 1e-12) {
    cmp.fock_s = exact.var_diff / snl_fock;
    cmp.gauss_s = lin.variance / snl_gauss;
    cmp.s_deviation = (cmp.fock_s > 1e-12)
                          ? std::abs(cmp.gauss_s - cmp.fock_s) / cmp.fock_s
                          : std::abs(cmp.gauss_s - cmp.fock_s);
  } else {
    cmp.fock_s = 0.0;
    cmp.gauss_s = 0.0;
    cmp.s_deviation = 0.0;
  }
  cmp.s_bound = 10.0 / std::max(alpha * alpha, 1.0);
  cmp.pass = cmp.mean_deviation <= 1e-7 && cmp.s_deviation <= cmp.s_bound;
  return cmp;
}

}  // namespace twinbeam
