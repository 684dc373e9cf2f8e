#include "qparity/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "qparity/bessel.hpp"
#include "qparity/constants.hpp"
#include "qparity/errors.hpp"

namespace qparity {
namespace cs = constants;

double f_kernel(double x, double y) {
  if (!(x > 0.0)) throw validation_error("f_kernel: x must be > 0");
  // cosh(x) e^-x = (1 + e^-2x)/2 against the scaled Bessel functions
  const double bracket =
      bessel_k1_scaled(x) - x * y * bessel_k0_scaled(x);
  return 0.5 * (1.0 + std::exp(-2.0 * x)) * bracket;
}

bool f_kernel_within_validity(double x, double y) {
  return y <= 0.1 && x * y <= 0.08;
}

double gamma_qp(double t_k, double ej_hz, double eps0_hz, double c0sq,
                double delta_uev, double mu_uev) {
  if (!(t_k > 0.0)) throw validation_error("gamma_qp: temperature must be > 0");
  if (!(delta_uev > mu_uev)) throw validation_error("gamma_qp: need Delta > mu");
  if (!(eps0_hz > 0.0) || !(ej_hz >= 0.0) || !(c0sq >= 0.0 && c0sq <= 1.0))
    throw validation_error("gamma_qp: bad spectral inputs");
  const double kt_uev = kelvin_to_uev(t_k);
  const double x = hz_to_uev(eps0_hz) / (2.0 * kt_uev);
  const double y = kt_uev / (2.0 * delta_uev);
  const double pref =
      16.0 * (ej_hz / uev_to_hz(delta_uev)) * c0sq * eps0_hz;
  if (pref == 0.0) return 0.0;
  // assembled in log space: the activation exponent alone can reach -10^5
  const double ln_gamma = std::log(pref) - (delta_uev - mu_uev) / kt_uev +
                          std::log(f_kernel(x, y));
  if (ln_gamma < -745.0) return 0.0;
  return std::exp(ln_gamma);
}

double xqp_from_mu(double t_k, double mu_uev, double delta0_uev) {
  if (!(t_k > 0.0)) throw validation_error("xqp_from_mu: temperature must be > 0");
  if (!(delta0_uev > 0.0)) throw validation_error("xqp_from_mu: Delta0 must be > 0");
  const double kt = kelvin_to_uev(t_k);
  const double ln_x = 0.5 * std::log(2.0 * cs::kPi * kt / delta0_uev) -
                      (delta0_uev - mu_uev) / kt;
  return std::exp(ln_x);
}

double mu_from_xqp(double t_k, double xqp, double delta0_uev) {
  if (!(t_k > 0.0)) throw validation_error("mu_from_xqp: temperature must be > 0");
  if (!(delta0_uev > 0.0)) throw validation_error("mu_from_xqp: Delta0 must be > 0");
  if (!(xqp > 0.0) || !(xqp < 1.0))
    throw validation_error("mu_from_xqp: x_qp must be in (0, 1)");
  const double kt = kelvin_to_uev(t_k);
  return delta0_uev +
         kt * (std::log(xqp) - 0.5 * std::log(2.0 * cs::kPi * kt / delta0_uev));
}

double gamma_p_of_temperature(double t_k, const ThermalModelParams& p) {
  if (!(t_k > 0.0))
    throw validation_error("gamma_p_of_temperature: temperature must be > 0");
  if (!(p.gp0_hz >= 0.0))
    throw validation_error("gamma_p_of_temperature: Gamma_P(0) must be >= 0");
  if (p.xqp == 0.0) return p.gp0_hz;
  if (!(p.xqp > 0.0 && p.xqp < 1e-3))
    throw validation_error("gamma_p_of_temperature: x_qp outside (0, 1e-3)");
  const double delta = p.gaps.delta_junction_uev;
  const double delta0 = p.gaps.delta_pad_uev;
  if (!(delta > delta0) || !(delta0 > 0.0))
    throw validation_error("gamma_p_of_temperature: need Delta > Delta0 > 0");
  const double kt = kelvin_to_uev(t_k);
  const double x = hz_to_uev(p.qubit.eps0_hz) / (2.0 * kt);
  const double y = kt / (2.0 * delta);
  const double pref =
      16.0 * (p.qubit.ej_hz / uev_to_hz(delta)) * p.qubit.c0sq * p.qubit.eps0_hz;
  const double activation = std::exp(-(delta - delta0) / kt);
  const double thermal = pref * activation * p.xqp *
                         std::sqrt(delta0 / (2.0 * cs::kPi * kt)) *
                         f_kernel(x, y);
  return p.gp0_hz + thermal;
}

ThermalFitResult fit_thermal_series(const std::vector<ThermalSeries>& series,
                                    const ThermalFitOptions& options) {
  if (series.empty()) throw validation_error("fit_thermal_series: no series");
  for (const auto& s : series) {
    if (s.points.size() < 3)
      throw validation_error("fit_thermal_series: series '" + s.qubit_id +
                             "' is rank deficient (need >= 3 temperature points)");
    double prev = 0.0;
    for (const auto& pt : s.points) {
      if (!(pt.temperature_k > prev))
        throw validation_error("fit_thermal_series: temperatures must be "
                               "positive and strictly increasing");
      if (!(pt.gamma_p_hz > 0.0))
        throw validation_error("fit_thermal_series: rates must be positive");
      prev = pt.temperature_k;
    }
  }

  // Three declared parameters per series (Gamma_P(0), x_qp, Delta); the
  // Delta entries of one chip share a tag and collapse onto one variable.
  FitProblem problem;
  problem.options = options.levmar;
  for (const auto& s : series) {
    double g_min = s.points.front().gamma_p_hz;
    for (const auto& pt : s.points) g_min = std::min(g_min, pt.gamma_p_hz);
    FitParam gp0;
    gp0.name = "gp0:" + s.qubit_id;
    gp0.initial = std::max(g_min, 1e-6);
    gp0.log_scale = true;
    problem.params.push_back(gp0);
    FitParam xqp;
    xqp.name = "xqp:" + s.qubit_id;
    xqp.initial = 1e-7;
    xqp.log_scale = true;
    problem.params.push_back(xqp);
    FitParam d;
    d.name = "delta:" + s.qubit_id;
    d.initial = options.delta_init_uev;
    d.lower = options.delta_lower_uev;
    d.upper = options.delta_upper_uev;
    d.share_tag = "delta:" + s.chip_id;
    problem.params.push_back(d);
  }

  const double delta0 = options.delta0_uev;
  problem.residual = [&series, delta0](std::span<const double> p) {
    std::vector<double> res;
    for (std::size_t i = 0; i < series.size(); ++i) {
      const auto& s = series[i];
      ThermalModelParams m;
      m.gp0_hz = p[3 * i];
      m.xqp = std::min(p[3 * i + 1], 9.9e-4);
      m.gaps.delta_junction_uev = p[3 * i + 2];
      m.gaps.delta_pad_uev = delta0;
      m.qubit = s.qubit;
      for (const auto& pt : s.points) {
        const double model = gamma_p_of_temperature(pt.temperature_k, m);
        const double w = pt.sigma_hz > 0.0 ? pt.gamma_p_hz / pt.sigma_hz : 1.0;
        res.push_back(w * std::log(std::max(model, 1e-300) / pt.gamma_p_hz));
      }
    }
    return res;
  };

  const FitResult fit = levmar_fit(problem);
  if (!fit.converged)
    throw convergence_error("fit_thermal_series: " + fit.message);

  ThermalFitResult out;
  out.final_cost = fit.final_cost;
  out.iterations = fit.iterations;
  std::map<std::string, ThermalFitResult::PerChip> chips;
  for (std::size_t i = 0; i < series.size(); ++i) {
    ThermalFitResult::PerQubit q;
    q.qubit_id = series[i].qubit_id;
    q.chip_id = series[i].chip_id;
    q.gp0_hz = fit.estimates[3 * i];
    q.gp0_err = fit.std_errors[3 * i];
    q.xqp = fit.estimates[3 * i + 1];
    q.xqp_err = fit.std_errors[3 * i + 1];
    out.qubits.push_back(q);
    if (!chips.count(q.chip_id))
      chips[q.chip_id] = {q.chip_id, fit.estimates[3 * i + 2],
                          fit.std_errors[3 * i + 2]};
  }
  for (const auto& s : series) {
    const auto it = chips.find(s.chip_id);
    if (it != chips.end()) {
      out.chips.push_back(it->second);
      chips.erase(it);
    }
  }
  out.residuals = problem.residual(fit.estimates);
  return out;
}

double generation_rate(double gp0_hz, double delta0_uev, double volume_um3) {
  if (!(gp0_hz >= 0.0)) throw validation_error("generation_rate: rate must be >= 0");
  if (!(volume_um3 > 0.0)) throw validation_error("generation_rate: volume must be > 0");
  if (!(delta0_uev > 0.0)) throw validation_error("generation_rate: Delta0 must be > 0");
  const double volume_m3 = volume_um3 * 1e-18;
  return gp0_hz /
         (2.0 * cs::kAlSingleSpinDos * uev_to_joule(delta0_uev) * volume_m3);
}

double steady_state_density(const QpBalance& balance) {
  const double g = balance.gen_rate;
  const double s = balance.trap_rate();
  const double r = balance.recomb_rate;
  if (!(g >= 0.0) || !(s >= 0.0) || !(r >= 0.0))
    throw validation_error("steady_state_density: rates must be >= 0");
  if (g == 0.0) return 0.0;
  if (r == 0.0 && s == 0.0)
    throw validation_error(
        "steady_state_density: no steady state with g > 0 and no losses");
  if (r == 0.0) return g / s;
  // x = (-s + sqrt(s^2 + 4 r g)) / (2 r), written without cancellation
  return 2.0 * g / (s + std::sqrt(s * s + 4.0 * r * g));
}

} // namespace qparity
