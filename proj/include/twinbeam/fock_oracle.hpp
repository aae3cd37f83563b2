#ifndef TWINBEAM_FOCK_ORACLE_HPP
#define TWINBEAM_FOCK_ORACLE_HPP

#include <Eigen/Dense>

#include "twinbeam/gaussian_state.hpp"

namespace twinbeam {

// Exact truncated Fock-space two-mode density matrix; index ordering is
// mode-major, row = n_a * cutoff + n_b. Verification-scale only.
struct FockState {
  int cutoff;
  Eigen::MatrixXcd rho;
};

// Largest per-mode dimension the oracle accepts (density matrix 4096^2).
inline constexpr int kMaxFockCutoff = 64;

// Probe in the truncated, renormalized coherent state |alpha>, conjugate in
// vacuum. Rejects cutoffs whose truncation leaks more than 1e-8 of the
// coherent-state norm.
FockState fock_seed(double alpha, int cutoff);

// Unitary generated by r (a'b' - ab), applied exactly within each
// n_a - n_b sector (the generator is block-tridiagonal there). Rejects the
// result if more than 1e-6 of the population sits on the truncation boundary.
FockState fock_two_mode_squeeze(const FockState& state, double r);

// Damping Kraus family for intensity transmission tau on one mode.
FockState fock_loss(const FockState& state, ModeIndex mode, double tau);

struct DifferenceStats {
  double mean_a;
  double mean_b;
  double var_diff;  // exact Var(N_a - N_b)
};
DifferenceStats fock_difference_stats(const FockState& state);

double fock_mean_photon(const FockState& state, ModeIndex mode);
double fock_trace(const FockState& state);
double fock_hermiticity_error(const FockState& state);
double fock_min_eigenvalue(const FockState& state);

// Runs seed -> squeeze -> probe loss through both the Gaussian engine and
// the Fock oracle and compares means and intensity-difference noise.
struct OracleComparison {
  double fock_mean_a, fock_mean_b;
  double gauss_mean_a, gauss_mean_b;
  double fock_s, gauss_s;     // Var(N_a-N_b)/(mean_a+mean_b); 0 when dark
  double mean_deviation;      // max over modes of |dN| / max(1, N_fock)
  double s_deviation;         // |dS| / S_fock, 0 when both sides are dark
  double s_bound;             // documented linearization bound, 10/alpha^2
  bool pass;
};
OracleComparison compare_engines(double alpha, double r, double tau, int cutoff);

}  // namespace twinbeam

#endif
