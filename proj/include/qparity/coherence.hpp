#ifndef QPARITY_COHERENCE_HPP
#define QPARITY_COHERENCE_HPP

#include <Eigen/Dense>
#include <vector>

namespace qparity {

enum class DecayKind { relaxation, echo };

struct DecayCurve {
  std::vector<double> times_s;      // ascending, positive
  std::vector<double> populations;  // in [-0.1, 1.1]
  DecayKind kind = DecayKind::relaxation;
};

struct T1Fit {
  double t1_s = 0.0, t1_err = 0.0;
  double amplitude = 0.0, offset = 0.0;
  Eigen::Matrix3d covariance = Eigen::Matrix3d::Zero();  // (T1, A, B)
  bool negative_decay_warning = false;
};

/// Least-squares fit of A exp(-t/T1) + B.
T1Fit fit_t1(const DecayCurve& curve);

struct EchoFit {
  double tphi_s = 0.0, tphi_err = 0.0;
  double amplitude = 0.0, offset = 0.0;
  Eigen::Matrix3d covariance = Eigen::Matrix3d::Zero();  // (Tphi, A, B)
};

/// Fit of A exp(-t/(2 T1) - (t/Tphi)^2) + B with T1 held at the relaxation
/// value (Gaussian dephasing under 1/f noise).
EchoFit fit_echo(const DecayCurve& curve, double t1_s);

struct ResonatorParams {
  double kappa_hz = 0.0;  // resonator decay rate
  double chi_hz = 0.0;    // dispersive shift
  double fr_hz = 0.0;     // resonator frequency
};

/// Thermal photon number 1 / (exp(h f / kB T) - 1).
double bose_einstein(double fr_hz, double t_k);

/// Dephasing by thermal resonator photons:
/// Gamma_phi = kappa^2/(kappa^2 + 4 chi^2) * (4 chi^2 / kappa) * nbar.
/// kappa and chi enter only through like-dimensioned ratios times nbar, so
/// the angular-frequency convention cancels in the prefactor.
double thermal_photon_dephasing(const ResonatorParams& res, double t_k);

/// 1/f charge-noise amplitude at 1 Hz (units e^2/Hz) from an echo Tphi and
/// the frequency-vs-offset slope. Convention: echo under 1/f noise gives
/// 1/Tphi = sqrt(A ln 2) |dw/dq| with q in electrons (q = 2 ng) and dw
/// angular, i.e. |dw/dq| = pi * (df/dng).
double charge_noise_amplitude(double tphi_s, double slope_hz_per_ng);

/// Forward model matching charge_noise_amplitude (exact inverse pair).
double echo_tphi_from_charge_noise(double a1hz_e2, double slope_hz_per_ng);

} // namespace qparity

#endif
