#ifndef QPARITY_ANTENNA_HPP
#define QPARITY_ANTENNA_HPP

#include <complex>
#include <filesystem>
#include <span>
#include <vector>

namespace qparity {

struct RlcBranch {
  double r_ohm = 0.0;
  double l_h = 0.0;
  double c_f = 0.0;
};

/// Lumped equivalent circuit of the qubit radiator: inter-pad capacitor in
/// series with two parallel RLC resonances (the fundamental and first
/// higher-order slot modes).
struct EquivCircuit {
  double c0_f = 0.0;
  RlcBranch mode1;
  RlcBranch mode2;
};

struct JunctionParams {
  double rn_ohm = 0.0;  // normal resistance
  double cj_f = 0.0;    // junction capacitance
  double tau_s() const { return rn_ohm * cj_f; }
};

/// Superconducting gaps, junction leads (thin film) and pads (thick film).
struct GapFrequencies {
  double delta_junction_uev = 0.0;
  double delta_pad_uev = 0.0;
};

/// Fitted circuit for the 80 x 35 um pad, 5 um gap geometry.
EquivCircuit default_equivalent_circuit();
JunctionParams default_junction();

std::complex<double> z_rad(const EquivCircuit& circuit, double f_hz);
std::complex<double> z_junction(const JunctionParams& junction, double f_hz);

/// e_c = 4 Re[Z_rad] Re[Z_J] / |Z_rad + Z_J|^2, in [0, 1]; equals 1 exactly
/// at conjugate matching.
double coupling_efficiency(std::complex<double> zrad, std::complex<double> zj);

/// Pair-breaking threshold f* = 2 Delta_junction / h.
double pair_breaking_frequency(const GapFrequencies& gaps);
/// Pad threshold f0 = 2 Delta_pad / h.
double pad_gap_frequency(const GapFrequencies& gaps);

/// Gamma_P = gamma_conv * e_c(f*).
double predict_parity_rate(double ec_star, double gamma_conv);

/// Folded-dipole input impedance Z_fd = 4 Z_t Z_d / (Z_t + 2 Z_d). Part of
/// the derivation chain Z_fs = Z0^2 / Z_fd, Z_rad = 2 Z_fs that connects a
/// plain dipole model to the slot radiator; provided as a helper, the free
/// space impedance Z0 = 376.73 ohm is in constants.
std::complex<double> folded_dipole_impedance(std::complex<double> z_t,
                                             std::complex<double> z_d);

struct EfficiencyMap {
  std::vector<double> rn_ohm;
  std::vector<double> cj_f;
  std::vector<double> ec;  // row-major over (rn, cj)
  double at(std::size_t i_rn, std::size_t i_cj) const {
    return ec[i_rn * cj_f.size() + i_cj];
  }
};

EfficiencyMap efficiency_map(std::span<const double> rn_grid,
                             std::span<const double> cj_grid,
                             const EquivCircuit& circuit, double f_hz);

/// E_C/h from the total capacitance via E_C = e^2/(2C). Note: for the
/// default C0 = 15 fF this gives 1.29 GHz, whereas the e^2/C convention
/// would give twice that; callers compare against spectroscopy at ~1.4 GHz.
double charging_energy_from_capacitance_hz(double c_f);

/// Externally simulated radiation impedance samples on a strictly
/// increasing frequency grid; linear interpolation in between.
class ImpedanceTable {
 public:
  ImpedanceTable(std::vector<double> f_hz, std::vector<std::complex<double>> z);
  static ImpedanceTable load(const std::filesystem::path& path);

  std::complex<double> interpolate(double f_hz) const;
  const std::vector<double>& frequencies() const { return f_hz_; }
  const std::vector<std::complex<double>>& impedances() const { return z_; }

 private:
  std::vector<double> f_hz_;
  std::vector<std::complex<double>> z_;
};

/// Emission-weighted mean of e_c over [f_lo, f_hi] with weight
/// exp(-h f / kB T_rad); the single-frequency e_c(f*) is the default
/// elsewhere since only photons near the pair-breaking threshold matter.
double integrated_efficiency(const EquivCircuit& circuit,
                             const JunctionParams& junction, double f_lo_hz,
                             double f_hi_hz, double t_rad_k);

} // namespace qparity

#endif
