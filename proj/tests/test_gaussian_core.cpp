#include <cmath>
#include <random>

#include <doctest.h>

#include "twinbeam/gaussian_state.hpp"

using namespace twinbeam;

namespace {
const ModeIndex kMode3{3};
}

TEST_CASE("vacuum construction") {
  const GaussianState s = vacuum(2);
  CHECK(s.n_modes() == 2);
  CHECK(s.mean.isZero(0.0));
  CHECK(s.cov.isIdentity(0.0));
  CHECK(mean_photon(s, kProbe) == doctest::Approx(0.0));
  CHECK_THROWS_AS(vacuum(0), std::invalid_argument);

  const auto nus = symplectic_eigenvalues(vacuum(1));
  REQUIRE(nus.size() == 1);
  CHECK(nus[0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("displacement gives coherent photon number") {
  const double alpha = 10.0;
  GaussianState s = displace(vacuum(2), kProbe, 2.0 * alpha, 0.0);
  CHECK(mean_photon(s, kProbe) == doctest::Approx(100.0).epsilon(1e-12));
  CHECK(mean_photon(s, kConjugate) == doctest::Approx(0.0));

  // Zero displacement is the identity; successive shifts add.
  const GaussianState same = displace(s, kConjugate, 0.0, 0.0);
  CHECK((same.mean - s.mean).cwiseAbs().maxCoeff() == 0.0);
  const GaussianState twice = displace(displace(vacuum(2), kProbe, 1.0, 2.0),
                                       kProbe, 3.0, -1.0);
  CHECK(twice.mean(0) == doctest::Approx(4.0));
  CHECK(twice.mean(1) == doctest::Approx(1.0));

  CHECK_THROWS_AS(displace(s, kMode3, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("two-mode squeezer covariance and mean transfer") {
  CHECK_THROWS_AS(two_mode_squeeze(vacuum(2), 0.1, kProbe, kProbe),
                  std::invalid_argument);

  // r = 0 is the identity.
  const GaussianState id = two_mode_squeeze(vacuum(2), 0.0, kProbe, kConjugate);
  CHECK(id.cov.isIdentity(1e-15));

  // cosh^2 r = 2: every quadrature variance is cosh(2r) = 3.
  const double r = std::acosh(std::sqrt(2.0));
  const GaussianState tms = two_mode_squeeze(vacuum(2), r, kProbe, kConjugate);
  for (int i = 0; i < 4; ++i) {
    CHECK(tms.cov(i, i) == doctest::Approx(3.0).epsilon(1e-12));
  }
  CHECK(mean_photon(tms, kProbe) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(mean_photon(tms, kConjugate) == doctest::Approx(1.0).epsilon(1e-12));

  // Seeded probe alpha^2 = 100, G = 2: conjugate picks up (G-1) alpha^2.
  GaussianState seeded = displace(vacuum(2), kProbe, 2.0 * 10.0, 0.0);
  seeded = two_mode_squeeze(seeded, r, kProbe, kConjugate);
  const double bright_b =
      (seeded.mean(2) * seeded.mean(2) + seeded.mean(3) * seeded.mean(3)) / 4.0;
  CHECK(bright_b == doctest::Approx(100.0).epsilon(1e-12));
}

TEST_CASE("attenuate limits and loss formula") {
  const double r = std::acosh(std::sqrt(2.0));
  const GaussianState tms = two_mode_squeeze(vacuum(2), r, kProbe, kConjugate);

  CHECK_THROWS_AS(attenuate(tms, kProbe, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(attenuate(tms, kProbe, -0.1), std::invalid_argument);

  const GaussianState same = attenuate(tms, kProbe, 1.0);
  CHECK((same.cov - tms.cov).cwiseAbs().maxCoeff() < 1e-15);

  const GaussianState dark = attenuate(tms, kProbe, 0.0);
  CHECK(dark.cov(0, 0) == doctest::Approx(1.0));
  CHECK(dark.cov(1, 1) == doctest::Approx(1.0));
  CHECK(std::abs(dark.cov(0, 2)) < 1e-15);
  CHECK(mean_photon(dark, kProbe) == doctest::Approx(0.0));

  const GaussianState half = attenuate(tms, kProbe, 0.5);
  CHECK(half.cov(0, 0) == doctest::Approx(0.5 * 3.0 + 0.5).epsilon(1e-12));
}

TEST_CASE("symplectic spectrum of pure and mixed states") {
  auto nus = symplectic_eigenvalues(vacuum(2));
  CHECK(nus[0] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(nus[1] == doctest::Approx(1.0).epsilon(1e-9));

  // Two-mode squeezed vacuum stays pure for any r.
  for (double r : {0.2, 0.9, 1.7}) {
    const auto pure =
        symplectic_eigenvalues(two_mode_squeeze(vacuum(2), r, kProbe, kConjugate));
    CHECK(pure[0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(pure[1] == doctest::Approx(1.0).epsilon(1e-9));
  }

  // Loss after squeezing makes the state mixed but keeps it physical.
  const double r = std::acosh(std::sqrt(2.0));
  GaussianState lossy = two_mode_squeeze(vacuum(2), r, kProbe, kConjugate);
  lossy = attenuate(lossy, kProbe, 0.5);
  const auto mixed = symplectic_eigenvalues(lossy);
  CHECK(mixed[0] >= 1.0 - 1e-9);
  CHECK(mixed[1] > mixed[0]);

  GaussianState bad = vacuum(2);
  bad.cov(0, 1) = 0.5;  // deliberately non-symmetric
  CHECK_THROWS_AS(symplectic_eigenvalues(bad), std::invalid_argument);
}

TEST_CASE("squeezer additivity and loss composition") {
  const GaussianState base = displace(vacuum(2), kProbe, 3.0, -1.0);

  GaussianState split = two_mode_squeeze(base, 0.4, kProbe, kConjugate);
  split = two_mode_squeeze(split, 0.7, kProbe, kConjugate);
  const GaussianState joint = two_mode_squeeze(base, 1.1, kProbe, kConjugate);
  CHECK((split.cov - joint.cov).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((split.mean - joint.mean).cwiseAbs().maxCoeff() < 1e-12);

  GaussianState twostep = attenuate(joint, kProbe, 0.6);
  twostep = attenuate(twostep, kProbe, 0.55);
  const GaussianState onestep = attenuate(joint, kProbe, 0.6 * 0.55);
  CHECK((twostep.cov - onestep.cov).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((twostep.mean - onestep.mean).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("random operation sequences preserve physicality") {
  std::mt19937_64 rng(20240817);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> op_pick(0, 2);
  std::uniform_int_distribution<int> mode_pick(1, 3);

  for (int trial = 0; trial < 1000; ++trial) {
    GaussianState s = vacuum(3);
    const int ops = 3 + static_cast<int>(unit(rng) * 5);
    for (int k = 0; k < ops; ++k) {
      const int ma = mode_pick(rng);
      switch (op_pick(rng)) {
        case 0:
          s = displace(s, ModeIndex{ma}, 4.0 * unit(rng) - 2.0,
                       4.0 * unit(rng) - 2.0);
          break;
        case 1: {
          int mb = mode_pick(rng);
          if (mb == ma) mb = (mb % 3) + 1;
          s = two_mode_squeeze(s, 1.2 * unit(rng), ModeIndex{ma}, ModeIndex{mb});
          break;
        }
        default:
          s = attenuate(s, ModeIndex{ma}, unit(rng));
      }
    }
    const double scale = std::max(1.0, s.cov.cwiseAbs().maxCoeff());
    REQUIRE((s.cov - s.cov.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * scale);
    const auto nus = symplectic_eigenvalues(s);
    REQUIRE(nus.front() >= 1.0 - 1e-9);
  }
}

TEST_CASE("squeezing leaves the symplectic spectrum unchanged") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  GaussianState s = vacuum(3);
  s = attenuate(s, kProbe, 0.4);  // start from a mixed state
  s = two_mode_squeeze(s, 0.8, kProbe, kConjugate);
  const auto before = symplectic_eigenvalues(s);
  for (int k = 0; k < 6; ++k) {
    const int a = 1 + static_cast<int>(unit(rng) * 3) % 3;
    const int b = (a % 3) + 1;
    s = two_mode_squeeze(s, 0.5 * unit(rng), ModeIndex{a}, ModeIndex{b});
  }
  const auto after = symplectic_eigenvalues(s);
  for (size_t i = 0; i < before.size(); ++i) {
    CHECK(after[i] == doctest::Approx(before[i]).epsilon(1e-9));
  }
}
