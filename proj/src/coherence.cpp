#include "qparity/coherence.hpp"

#include <algorithm>
#include <cmath>

#include "qparity/constants.hpp"
#include "qparity/errors.hpp"
#include "qparity/levmar.hpp"

namespace qparity {
namespace cs = constants;
namespace {

void validate_curve(const DecayCurve& curve, DecayKind expected) {
  if (curve.kind != expected)
    throw validation_error("decay fit: curve kind does not match the fit");
  if (curve.times_s.size() != curve.populations.size())
    throw validation_error("decay fit: times/populations size mismatch");
  if (curve.times_s.size() < 5)
    throw validation_error("decay fit: need >= 5 points");
  double prev = 0.0;
  for (double t : curve.times_s) {
    if (!(t > prev)) // positive, strictly ascending
      throw validation_error("decay fit: times must be positive and ascending");
    prev = t;
  }
  for (double p : curve.populations)
    if (!(p >= -0.1 && p <= 1.1))
      throw validation_error("decay fit: populations outside [-0.1, 1.1]");
}

struct DecayInit {
  double amplitude, offset, timescale;
  bool negative_decay;
};

// offset from the curve tail, timescale from a log-linear regression of the
// offset-subtracted populations
DecayInit init_decay(const DecayCurve& curve) {
  const auto& t = curve.times_s;
  const auto& p = curve.populations;
  const std::size_t n = t.size();
  const std::size_t n_tail = std::max<std::size_t>(1, n / 10);
  double b0 = 0.0;
  for (std::size_t i = n - n_tail; i < n; ++i) b0 += p[i];
  b0 /= static_cast<double>(n_tail);
  const double a0 = p.front() - b0;

  DecayInit init{a0, b0, 0.0, a0 <= 0.0};
  if (init.negative_decay) {
    init.amplitude = std::max(std::fabs(a0), 1e-3);
    init.timescale = t.back();
    return init;
  }
  // regression of ln(p - b) over the usable prefix
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t m = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double y = p[i] - b0;
    if (y < 0.05 * a0) break;
    const double ly = std::log(y);
    sx += t[i];
    sy += ly;
    sxx += t[i] * t[i];
    sxy += t[i] * ly;
    ++m;
  }
  if (m >= 2) {
    const double denom = static_cast<double>(m) * sxx - sx * sx;
    const double slope = denom != 0.0
                             ? (static_cast<double>(m) * sxy - sx * sy) / denom
                             : 0.0;
    if (slope < 0.0) init.timescale = -1.0 / slope;
  }
  if (!(init.timescale > 0.0)) {
    throw convergence_error(
        "decay fit: no decay visible (constant or rising curve)");
  }
  return init;
}

FitParam log_param(const char* name, double initial) {
  FitParam p;
  p.name = name;
  p.initial = initial;
  p.log_scale = true;
  return p;
}

FitParam free_param(const char* name, double initial) {
  FitParam p;
  p.name = name;
  p.initial = initial;
  return p;
}

} // namespace

T1Fit fit_t1(const DecayCurve& curve) {
  validate_curve(curve, DecayKind::relaxation);
  const DecayInit init = init_decay(curve);

  FitProblem problem;
  problem.params = {log_param("T1", init.timescale),
                    log_param("A", std::max(init.amplitude, 1e-6)),
                    free_param("B", init.offset)};
  const auto& t = curve.times_s;
  const auto& y = curve.populations;
  problem.residual = [&t, &y](std::span<const double> p) {
    std::vector<double> r(t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
      r[i] = p[1] * std::exp(-t[i] / p[0]) + p[2] - y[i];
    return r;
  };
  const FitResult fit = levmar_fit(problem);
  if (!fit.converged) throw convergence_error("fit_t1: " + fit.message);

  T1Fit out;
  out.t1_s = fit.estimates[0];
  out.t1_err = fit.std_errors[0];
  out.amplitude = fit.estimates[1];
  out.offset = fit.estimates[2];
  out.covariance = fit.covariance;
  out.negative_decay_warning = init.negative_decay;
  return out;
}

EchoFit fit_echo(const DecayCurve& curve, double t1_s) {
  validate_curve(curve, DecayKind::echo);
  if (!(t1_s > 0.0)) throw validation_error("fit_echo: T1 must be > 0");
  const DecayInit init = init_decay(curve);

  FitProblem problem;
  problem.params = {log_param("Tphi", init.timescale),
                    log_param("A", std::max(init.amplitude, 1e-6)),
                    free_param("B", init.offset)};
  const auto& t = curve.times_s;
  const auto& y = curve.populations;
  problem.residual = [&t, &y, t1_s](std::span<const double> p) {
    std::vector<double> r(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      const double gauss = t[i] / p[0];
      r[i] = p[1] * std::exp(-t[i] / (2.0 * t1_s) - gauss * gauss) + p[2] - y[i];
    }
    return r;
  };
  const FitResult fit = levmar_fit(problem);
  if (!fit.converged) throw convergence_error("fit_echo: " + fit.message);

  EchoFit out;
  out.tphi_s = fit.estimates[0];
  out.tphi_err = fit.std_errors[0];
  out.amplitude = fit.estimates[1];
  out.offset = fit.estimates[2];
  out.covariance = fit.covariance;
  return out;
}

double bose_einstein(double fr_hz, double t_k) {
  if (!(fr_hz > 0.0)) throw validation_error("bose_einstein: frequency must be > 0");
  if (!(t_k > 0.0)) throw validation_error("bose_einstein: temperature must be > 0");
  const double x = cs::kPlanck * fr_hz / (cs::kBoltzmann * t_k);
  return 1.0 / std::expm1(x);
}

double thermal_photon_dephasing(const ResonatorParams& res, double t_k) {
  if (!(res.kappa_hz > 0.0) || !(res.chi_hz > 0.0) || !(res.fr_hz > 0.0))
    throw validation_error("thermal_photon_dephasing: parameters must be > 0");
  const double k2 = res.kappa_hz * res.kappa_hz;
  const double chi2 = res.chi_hz * res.chi_hz;
  const double prefactor = k2 / (k2 + 4.0 * chi2) * (4.0 * chi2 / res.kappa_hz);
  return prefactor * bose_einstein(res.fr_hz, t_k);
}

double charge_noise_amplitude(double tphi_s, double slope_hz_per_ng) {
  if (!(tphi_s > 0.0)) throw validation_error("charge_noise_amplitude: Tphi must be > 0");
  if (slope_hz_per_ng == 0.0)
    throw validation_error(
        "charge_noise_amplitude: zero dispersion slope (sweet spot)");
  const double dw_dq = cs::kPi * std::fabs(slope_hz_per_ng);  // rad/s per e
  const double gamma = 1.0 / tphi_s;
  return gamma * gamma / (std::log(2.0) * dw_dq * dw_dq);
}

double echo_tphi_from_charge_noise(double a1hz_e2, double slope_hz_per_ng) {
  if (!(a1hz_e2 > 0.0))
    throw validation_error("echo_tphi_from_charge_noise: amplitude must be > 0");
  if (slope_hz_per_ng == 0.0)
    throw validation_error("echo_tphi_from_charge_noise: zero dispersion slope");
  const double dw_dq = cs::kPi * std::fabs(slope_hz_per_ng);
  return 1.0 / (std::sqrt(a1hz_e2 * std::log(2.0)) * dw_dq);
}

} // namespace qparity
