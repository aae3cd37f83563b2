#ifndef TWINBEAM_GAUSSIAN_STATE_HPP
#define TWINBEAM_GAUSSIAN_STATE_HPP

#include <Eigen/Dense>
#include <vector>

namespace twinbeam {

// 1-based mode label. Mode 1 is the probe, mode 2 the conjugate, everywhere.
struct ModeIndex {
  int value;
  explicit constexpr ModeIndex(int v) : value(v) {}
};

inline constexpr ModeIndex kProbe{1};
inline constexpr ModeIndex kConjugate{2};

/// Gaussian state of n bosonic modes in quadrature ordering (x1,p1,x2,p2,...).
/// Convention: vacuum covariance is the identity (vacuum quadrature
/// variance = 1), so [x,p] = 2i and <N> = (<x>^2+<p>^2)/4 + (tr cov_mode - 2)/4.
struct GaussianState {
  Eigen::VectorXd mean;
  Eigen::MatrixXd cov;

  int n_modes() const { return static_cast<int>(mean.size()) / 2; }
};

GaussianState vacuum(int n_modes);

// Shifts the mean of one mode by (amp_x, amp_p); covariance untouched.
GaussianState displace(const GaussianState& state, ModeIndex mode,
                       double amp_x, double amp_p);

// Phase-0 two-mode squeezer: x_a -> cosh(r) x_a + sinh(r) x_b,
// p_a -> cosh(r) p_a - sinh(r) p_b, symmetric in a<->b.
// Intensity gain on a coherently seeded probe is G = cosh(r)^2.
GaussianState two_mode_squeeze(const GaussianState& state, double r,
                               ModeIndex mode_a, ModeIndex mode_b);

// Beamsplitter loss channel with intensity transmission tau on one mode.
GaussianState attenuate(const GaussianState& state, ModeIndex mode, double tau);

// Symplectic spectrum of the covariance matrix, sorted ascending.
// All values >= 1 iff the state satisfies the uncertainty relation.
std::vector<double> symplectic_eigenvalues(const GaussianState& state);

double mean_photon(const GaussianState& state, ModeIndex mode);

}  // namespace twinbeam

#endif
