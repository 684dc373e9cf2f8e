#include <doctest.h>

#include <cmath>

#include "qparity/coherence.hpp"
#include "qparity/constants.hpp"
#include "qparity/errors.hpp"
#include "qparity/rng.hpp"
#include "qparity/spectrum.hpp"

using namespace qparity;
namespace cs = qparity::constants;

namespace {

double rel(double a, double b) {
  return std::fabs(a - b) / std::max({std::fabs(a), std::fabs(b), 1e-300});
}

DecayCurve relaxation_curve(double t1_s, double a, double b, double noise,
                            std::uint64_t seed, int n = 60) {
  RngStream rng(seed);
  DecayCurve c;
  c.kind = DecayKind::relaxation;
  for (int i = 0; i < n; ++i) {
    const double t = (i + 1) * 4.0 * t1_s / n;
    c.times_s.push_back(t);
    c.populations.push_back(a * std::exp(-t / t1_s) + b +
                            (noise > 0 ? noise * rng.normal() : 0.0));
  }
  return c;
}

DecayCurve echo_curve(double tphi_s, double t1_s, double a, double b,
                      double noise, std::uint64_t seed, int n = 60) {
  RngStream rng(seed);
  DecayCurve c;
  c.kind = DecayKind::echo;
  for (int i = 0; i < n; ++i) {
    const double t = (i + 1) * 3.0 * tphi_s / n;
    const double g = t / tphi_s;
    c.times_s.push_back(t);
    c.populations.push_back(a * std::exp(-t / (2.0 * t1_s) - g * g) + b +
                            (noise > 0 ? noise * rng.normal() : 0.0));
  }
  return c;
}

} // namespace

TEST_CASE("relaxation fit recovers exact data") {
  const auto curve = relaxation_curve(24.4e-6, 0.93, 0.05, 0.0, 0);
  const auto fit = fit_t1(curve);
  CHECK(rel(fit.t1_s, 24.4e-6) < 1e-9);
  CHECK(rel(fit.amplitude, 0.93) < 1e-9);
  CHECK(std::fabs(fit.offset - 0.05) < 1e-9);
  CHECK(!fit.negative_decay_warning);
}

TEST_CASE("relaxation fit under one percent noise") {
  const auto curve = relaxation_curve(24.4e-6, 0.9, 0.05, 0.01, 17);
  const auto fit = fit_t1(curve);
  CHECK(rel(fit.t1_s, 24.4e-6) < 0.03);
  CHECK(fit.t1_err > 0.0);
}

TEST_CASE("relaxation fit rejects a constant curve") {
  DecayCurve flat;
  flat.kind = DecayKind::relaxation;
  for (int i = 0; i < 20; ++i) {
    flat.times_s.push_back((i + 1) * 1e-6);
    flat.populations.push_back(0.4);
  }
  CHECK_THROWS_AS(fit_t1(flat), convergence_error);
}

TEST_CASE("relaxation fit validation") {
  auto curve = relaxation_curve(10e-6, 0.9, 0.0, 0.0, 0);
  curve.kind = DecayKind::echo;
  CHECK_THROWS_AS(fit_t1(curve), validation_error);
  DecayCurve tiny;
  tiny.kind = DecayKind::relaxation;
  tiny.times_s = {1e-6, 2e-6};
  tiny.populations = {0.9, 0.8};
  CHECK_THROWS_AS(fit_t1(tiny), validation_error);
}

TEST_CASE("echo fit recovers the dephasing time") {
  const auto curve = echo_curve(22.8e-6, 24.4e-6, 0.9, 0.05, 0.01, 23);
  const auto fit = fit_echo(curve, 24.4e-6);
  CHECK(rel(fit.tphi_s, 22.8e-6) < 0.05);
}

TEST_CASE("echo fit with pure relaxation decay") {
  // no Gaussian component: fitted 1/Tphi consistent with zero
  RngStream rng(29);
  DecayCurve c;
  c.kind = DecayKind::echo;
  const double t1 = 24.4e-6;
  for (int i = 0; i < 60; ++i) {
    const double t = (i + 1) * 2.0 * t1 / 60.0;
    c.times_s.push_back(t);
    c.populations.push_back(0.9 * std::exp(-t / (2.0 * t1)) +
                            0.002 * rng.normal());
  }
  const auto fit = fit_echo(c, t1);
  const double gauss_rate = 1.0 / fit.tphi_s;
  const double gauss_rate_err = fit.tphi_err / (fit.tphi_s * fit.tphi_s);
  CHECK(gauss_rate < 2.0 * gauss_rate_err + 0.05 / t1);
}

TEST_CASE("echo fit is scale equivariant") {
  const auto base = echo_curve(20e-6, 30e-6, 0.9, 0.05, 0.0, 0);
  DecayCurve doubled = base;
  for (auto& t : doubled.times_s) t *= 2.0;
  const auto fit1 = fit_echo(base, 30e-6);
  const auto fit2 = fit_echo(doubled, 60e-6);
  CHECK(rel(fit2.tphi_s, 2.0 * fit1.tphi_s) < 1e-6);
}

TEST_CASE("thermal photon number") {
  // hf = kT ln 2 puts exactly one photon in the mode
  const double t = 0.1;
  const double f = std::log(2.0) * cs::kBoltzmann * t / cs::kPlanck;
  CHECK(rel(bose_einstein(f, t), 1.0) < 1e-12);
  CHECK(rel(bose_einstein(5.556e9, 0.1), 0.0747) < 0.01);
  CHECK(bose_einstein(5.556e9, 0.05) < bose_einstein(5.556e9, 0.1));
  CHECK_THROWS_AS(bose_einstein(5.556e9, 0.0), validation_error);
}

TEST_CASE("thermal photon dephasing") {
  ResonatorParams res;
  res.kappa_hz = 0.8e6;
  res.chi_hz = 0.4e6;
  res.fr_hz = 5.556e9;
  // kappa^2 = 4 chi^2 makes the prefactor exactly kappa / 2
  const double prefactor =
      thermal_photon_dephasing(res, 0.1) / bose_einstein(res.fr_hz, 0.1);
  CHECK(rel(prefactor, 0.4e6) < 1e-12);

  // monotone in temperature, frozen out at low temperature
  double prev = 0.0;
  for (double t = 0.01; t <= 0.2; t += 0.01) {
    const double g = thermal_photon_dephasing(res, t);
    CHECK(g > prev);
    prev = g;
  }
  CHECK(thermal_photon_dephasing(res, 0.005) < 1e-4);

  // the prefactor factors out of the temperature dependence
  const double r1 =
      thermal_photon_dephasing(res, 0.07) / bose_einstein(res.fr_hz, 0.07);
  const double r2 =
      thermal_photon_dephasing(res, 0.13) / bose_einstein(res.fr_hz, 0.13);
  CHECK(rel(r1, r2) < 1e-12);
}

TEST_CASE("charge noise amplitude scaling and round trip") {
  const double slope = 2.9e9;  // Hz per unit ng
  const double tphi = 80e-9;
  const double a1 = charge_noise_amplitude(tphi, slope);
  const double a2 = charge_noise_amplitude(tphi, 2.0 * slope);
  CHECK(rel(a1, 4.0 * a2) < 1e-12);

  const double tphi_back = echo_tphi_from_charge_noise(a1, slope);
  CHECK(rel(tphi_back, tphi) < 1e-9);
  CHECK_THROWS_AS(charge_noise_amplitude(tphi, 0.0), validation_error);
}

TEST_CASE("charge noise amplitude from an echo fit near the reported level") {
  // dispersion slope away from the sweet spot, echo data generated at the
  // reported 1/f amplitude, recovered through the fit + inversion chain
  QubitParams q;
  q.ej_hz = 4.67e9;
  q.ec_hz = 1.40e9;
  q.ng = 0.1;
  const double slope = charge_dispersion_slope(q, Parity::odd).value;
  const double a_ref = 4.0e-6;  // (2.0e-3 e)^2 at 1 Hz
  const double tphi = echo_tphi_from_charge_noise(a_ref, slope);
  const double t1 = 24.4e-6;

  RngStream rng(37);
  DecayCurve c;
  c.kind = DecayKind::echo;
  for (int i = 0; i < 50; ++i) {
    const double t = (i + 1) * 3.0 * tphi / 50.0;
    const double g = t / tphi;
    c.times_s.push_back(t);
    c.populations.push_back(0.9 * std::exp(-t / (2.0 * t1) - g * g) + 0.05 +
                            0.01 * rng.normal());
  }
  const auto fit = fit_echo(c, t1);
  const double a_est = charge_noise_amplitude(fit.tphi_s, slope);
  CHECK(a_est < 3.0 * a_ref);
  CHECK(a_est > a_ref / 3.0);
}
