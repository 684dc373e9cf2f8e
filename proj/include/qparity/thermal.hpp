#ifndef QPARITY_THERMAL_HPP
#define QPARITY_THERMAL_HPP

#include <string>
#include <vector>

#include "qparity/antenna.hpp"
#include "qparity/levmar.hpp"

namespace qparity {

/// Spectral quantities entering the tunnelling-rate model, all obtained
/// from the qubit spectrum (not fitted).
struct SpectralInputs {
  double ej_hz = 0.0;
  double eps0_hz = 0.0;
  double c0sq = 0.0;
};

struct ThermalModelParams {
  double gp0_hz = 0.0;  // temperature-independent rate
  double xqp = 0.0;     // normalized pad quasiparticle density
  GapFrequencies gaps;
  SpectralInputs qubit;
};

/// F(x, y) = cosh(x) [K1(x) - x y K0(x)], evaluated in scaled form so it is
/// stable for arbitrarily large x. Accurate as an approximation to the
/// underlying spectral integral only for y <~ 0.1 and x y <~ 0.08.
double f_kernel(double x, double y);
bool f_kernel_within_validity(double x, double y);

/// Quasiparticle tunnelling rate at quasiequilibrium with effective chemical
/// potential mu. Exponent handled in log space; underflows to exactly 0.
double gamma_qp(double t_k, double ej_hz, double eps0_hz, double c0sq,
                double delta_uev, double mu_uev);

/// Normalized density from the chemical potential and its closed-form inverse.
double xqp_from_mu(double t_k, double mu_uev, double delta0_uev);
double mu_from_xqp(double t_k, double xqp, double delta0_uev);

/// Gamma_P(T) = Gamma_P(0) + thermal-activation term; algebraically equal to
/// gamma_qp composed with mu_from_xqp plus the constant.
double gamma_p_of_temperature(double t_k, const ThermalModelParams& params);

struct ThermalPoint {
  double temperature_k = 0.0;
  double gamma_p_hz = 0.0;
  double sigma_hz = 0.0;  // 0 means unit relative weight
};

struct ThermalSeries {
  std::string qubit_id;
  std::string chip_id;
  SpectralInputs qubit;
  std::vector<ThermalPoint> points;
};

struct ThermalFitOptions {
  double delta0_uev = 180.0;      // pad gap, fixed (thick-film value)
  double delta_init_uev = 210.0;  // junction gap start
  double delta_lower_uev = 185.0;
  double delta_upper_uev = 300.0;
  FitOptions levmar;
};

struct ThermalFitResult {
  struct PerQubit {
    std::string qubit_id;
    std::string chip_id;
    double gp0_hz = 0.0, gp0_err = 0.0;
    double xqp = 0.0, xqp_err = 0.0;
  };
  std::vector<PerQubit> qubits;
  struct PerChip {
    std::string chip_id;
    double delta_uev = 0.0, delta_err = 0.0;
  };
  std::vector<PerChip> chips;
  double final_cost = 0.0;
  int iterations = 0;
  std::vector<double> residuals;  // weighted log residuals, series order
};

/// Weighted least squares on log Gamma_P with Delta shared across every
/// series of a chip and Delta0 held fixed. Throws convergence_error when the
/// optimizer fails, validation_error when a series has < 3 points.
ThermalFitResult fit_thermal_series(const std::vector<ThermalSeries>& series,
                                    const ThermalFitOptions& options = {});

/// Quasiparticle generation rate g = Gamma_P(0) / (2 nu0 Delta0 V).
double generation_rate(double gp0_hz, double delta0_uev, double volume_um3);

struct QpBalance {
  double gen_rate = 0.0;         // g, 1/s
  double trap_background = 0.0;  // s0, 1/s
  double trap_vortex = 0.0;      // s_v, 1/s
  double recomb_rate = 0.0;      // r, 1/s
  double trap_rate() const { return trap_background + trap_vortex; }
};

/// Nonnegative root of 0 = g - s x - r x^2 (cancellation-free form).
double steady_state_density(const QpBalance& balance);

} // namespace qparity

#endif
