#include <cmath>
#include <random>

#include <doctest.h>

#include "twinbeam/media.hpp"
#include "twinbeam/metrics.hpp"

using namespace twinbeam;

namespace {

GaussianState seeded_tms(double alpha, double gain) {
  GaussianState s = displace(vacuum(2), kProbe, 2.0 * alpha, 0.0);
  return two_mode_squeeze(s, std::acosh(std::sqrt(gain)), kProbe, kConjugate);
}

}  // namespace

TEST_CASE("coherent light defines the shot-noise limit") {
  const GaussianState coherent = displace(vacuum(2), kProbe, 2.0 * 1000.0, 0.0);
  for (double eta : {0.3, 0.7, 1.0}) {
    const SqueezingResult res =
        intensity_difference_squeezing(coherent, {eta, eta});
    CHECK(res.s_linear == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(res.s_db == doctest::Approx(0.0).epsilon(1e-9));
  }
}

TEST_CASE("seeded twin beams at G = 2") {
  const GaussianState state = seeded_tms(1000.0, 2.0);
  const SqueezingResult res = intensity_difference_squeezing(state, {1.0, 1.0});
  CHECK(res.s_linear == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
  CHECK(res.s_db == doctest::Approx(-4.771).epsilon(1e-3));
  CHECK(res.p_probe == doctest::Approx(2e6).epsilon(1e-3));
  CHECK(res.p_conj == doctest::Approx(1e6).epsilon(1e-3));
}

TEST_CASE("balanced detection loss degrades squeezing affinely") {
  const GaussianState state = seeded_tms(1000.0, 1.7);
  const SqueezingResult res = intensity_difference_squeezing(state, {0.5, 0.5});
  CHECK(res.s_linear == doctest::Approx(0.7083333).epsilon(1e-6));
  CHECK(res.s_db == doctest::Approx(-1.4969).epsilon(1e-3));

  // 1 - eta (1 - S(1)) for a grab bag of states and efficiencies.
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int k = 0; k < 20; ++k) {
    GaussianState s = seeded_tms(500.0 + 500.0 * unit(rng), 1.0 + 2.0 * unit(rng));
    s = attenuate(s, kProbe, 0.5 + 0.5 * unit(rng));
    const double s1 = intensity_difference_squeezing(s, {1.0, 1.0}).s_linear;
    const double eta = 0.2 + 0.8 * unit(rng);
    const double se = intensity_difference_squeezing(s, {eta, eta}).s_linear;
    CHECK(std::abs(se - (1.0 - eta * (1.0 - s1))) <= 1e-10);
  }
}

TEST_CASE("dark input is rejected") {
  CHECK_THROWS_AS(intensity_difference_squeezing(vacuum(2), {1.0, 1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      intensity_difference_squeezing(seeded_tms(1000.0, 2.0), {1.5, 1.0}),
      std::invalid_argument);
}

TEST_CASE("single-beam noise of amplified light") {
  const GaussianState coherent = displace(vacuum(2), kProbe, 2.0 * 1000.0, 0.0);
  CHECK(single_beam_noise(coherent, kProbe, {1.0, 1.0}) ==
        doctest::Approx(1.0).epsilon(1e-12));

  const GaussianState state = seeded_tms(1000.0, 2.0);
  CHECK(single_beam_noise(state, kProbe, {1.0, 1.0}) ==
        doctest::Approx(3.0).epsilon(1e-9));
  CHECK(single_beam_noise(state, kConjugate, {1.0, 1.0}) ==
        doctest::Approx(3.0).epsilon(1e-9));
  CHECK(single_beam_noise(state, kProbe, {0.5, 0.5}) ==
        doctest::Approx(2.0).epsilon(1e-9));

  CHECK_THROWS_AS(single_beam_noise(coherent, kConjugate, {1.0, 1.0}),
                  std::invalid_argument);
}

TEST_CASE("joint squeezing with individually noisy beams") {
  // The measured operating point: difference noise below SNL while each
  // single beam sits above its own shot noise.
  GaussianState state = displace(vacuum(2), kProbe, 2.0 * 1000.0, 0.0);
  state = propagate_dgl(state, medium_from_intrinsic_gain(1.7, 0.17), 2000);
  const SqueezingResult joint = intensity_difference_squeezing(state, {0.5, 0.5});
  CHECK(joint.s_linear < 1.0);
  CHECK(single_beam_noise(state, kProbe, {0.5, 0.5}) > 1.0);
  CHECK(single_beam_noise(state, kConjugate, {0.5, 0.5}) > 1.0);
}

TEST_CASE("decibel conversion") {
  CHECK(to_db(1.0) == doctest::Approx(0.0));
  CHECK(to_db(1.0 / 3.0) == doctest::Approx(-4.7712).epsilon(1e-4));
  CHECK(to_db(0.5) == doctest::Approx(-3.0103).epsilon(1e-4));
  CHECK_THROWS_AS(to_db(0.0), std::invalid_argument);
  CHECK_THROWS_AS(to_db(-1.0), std::invalid_argument);

  for (double s : {1e-3, 0.25, 1.0, 7.5}) {
    CHECK(std::pow(10.0, to_db(s) / 10.0) == doctest::Approx(s).epsilon(1e-12));
  }
}

TEST_CASE("shot-noise curve is linear through the origin") {
  const auto curve = snl_curve({0.0, 50.0, 100.0, 1e4});
  CHECK(curve[0].second == doctest::Approx(0.0));
  CHECK(curve[2].second == doctest::Approx(2.0 * curve[1].second).epsilon(1e-12));
  CHECK(curve[3].second == doctest::Approx(1e4).epsilon(1e-12));

  // Least-squares fit over a wide power range: zero intercept.
  std::vector<double> powers;
  for (int k = 1; k <= 6; ++k) powers.push_back(std::pow(10.0, k));
  const auto wide = snl_curve(powers);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [p, noise] : wide) {
    sx += p;
    sy += noise;
    sxx += p * p;
    sxy += p * noise;
  }
  const double n = static_cast<double>(wide.size());
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / n;
  CHECK(slope == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::abs(intercept) <= 1e-9 * wide.back().second);

  CHECK_THROWS_AS(snl_curve({-1.0}), std::invalid_argument);
}
