#include "qparity/antenna.hpp"

#include <algorithm>
#include <cmath>

#include "qparity/constants.hpp"
#include "qparity/errors.hpp"
#include "qparity/tsv.hpp"

namespace qparity {

using std::complex;
namespace cs = constants;

EquivCircuit default_equivalent_circuit() {
  return EquivCircuit{15e-15, {40.0, 5.3e-12, 17e-15}, {130.0, 2e-12, 10e-15}};
}

JunctionParams default_junction() { return JunctionParams{30e3, 2.43e-15}; }

namespace {

void validate(const EquivCircuit& c) {
  const double vals[] = {c.c0_f,     c.mode1.r_ohm, c.mode1.l_h, c.mode1.c_f,
                         c.mode2.r_ohm, c.mode2.l_h, c.mode2.c_f};
  for (double v : vals)
    if (!(v > 0.0))
      throw validation_error("equivalent circuit: all elements must be > 0");
}

void validate(const JunctionParams& j) {
  if (!(j.rn_ohm > 0.0) || !(j.cj_f > 0.0))
    throw validation_error("junction: R_n and C_J must be > 0");
}

complex<double> parallel_rlc(const RlcBranch& b, double omega) {
  const complex<double> y(1.0 / b.r_ohm, omega * b.c_f - 1.0 / (omega * b.l_h));
  return 1.0 / y;
}

} // namespace

complex<double> z_rad(const EquivCircuit& circuit, double f_hz) {
  validate(circuit);
  if (!(f_hz > 0.0)) throw validation_error("z_rad: frequency must be > 0");
  const double omega = 2.0 * cs::kPi * f_hz;
  const complex<double> series_c(0.0, -1.0 / (omega * circuit.c0_f));
  return series_c + parallel_rlc(circuit.mode1, omega) +
         parallel_rlc(circuit.mode2, omega);
}

complex<double> z_junction(const JunctionParams& junction, double f_hz) {
  validate(junction);
  if (!(f_hz > 0.0)) throw validation_error("z_junction: frequency must be > 0");
  const double wt = 2.0 * cs::kPi * f_hz * junction.tau_s();
  const double denom = 1.0 + wt * wt;
  return {junction.rn_ohm / denom, -junction.rn_ohm * wt / denom};
}

double coupling_efficiency(complex<double> zrad, complex<double> zj) {
  if (!(zrad.real() >= 0.0))
    throw validation_error("coupling_efficiency: Re[Z_rad] must be >= 0");
  if (!(zj.real() > 0.0))
    throw validation_error("coupling_efficiency: Re[Z_J] must be > 0");
  const complex<double> sum = zrad + zj;
  const double denom = std::norm(sum);
  if (denom == 0.0)
    throw validation_error("coupling_efficiency: Z_rad = -Z_J pole");
  const double ec = 4.0 * zrad.real() * zj.real() / denom;
  return std::clamp(ec, 0.0, 1.0);
}

double pair_breaking_frequency(const GapFrequencies& gaps) {
  if (!(gaps.delta_junction_uev > gaps.delta_pad_uev) ||
      !(gaps.delta_pad_uev > 0.0))
    throw validation_error("gaps: need delta_junction > delta_pad > 0");
  return 2.0 * uev_to_hz(gaps.delta_junction_uev);
}

double pad_gap_frequency(const GapFrequencies& gaps) {
  if (!(gaps.delta_junction_uev > gaps.delta_pad_uev) ||
      !(gaps.delta_pad_uev > 0.0))
    throw validation_error("gaps: need delta_junction > delta_pad > 0");
  return 2.0 * uev_to_hz(gaps.delta_pad_uev);
}

double predict_parity_rate(double ec_star, double gamma_conv) {
  if (!(ec_star >= 0.0 && ec_star <= 1.0))
    throw validation_error("predict_parity_rate: e_c must be in [0, 1]");
  if (!(gamma_conv > 0.0))
    throw validation_error("predict_parity_rate: conversion rate must be > 0");
  return gamma_conv * ec_star;
}

complex<double> folded_dipole_impedance(complex<double> z_t, complex<double> z_d) {
  const complex<double> denom = z_t + 2.0 * z_d;
  if (std::norm(denom) == 0.0)
    throw validation_error("folded_dipole_impedance: Z_t + 2 Z_d pole");
  return 4.0 * z_t * z_d / denom;
}

EfficiencyMap efficiency_map(std::span<const double> rn_grid,
                             std::span<const double> cj_grid,
                             const EquivCircuit& circuit, double f_hz) {
  if (rn_grid.empty() || cj_grid.empty())
    throw validation_error("efficiency_map: empty grid");
  for (double r : rn_grid)
    if (!(r > 0.0)) throw validation_error("efficiency_map: R_n must be > 0");
  for (double c : cj_grid)
    if (!(c > 0.0)) throw validation_error("efficiency_map: C_J must be > 0");
  const complex<double> zr = z_rad(circuit, f_hz);
  EfficiencyMap map;
  map.rn_ohm.assign(rn_grid.begin(), rn_grid.end());
  map.cj_f.assign(cj_grid.begin(), cj_grid.end());
  map.ec.reserve(rn_grid.size() * cj_grid.size());
  for (double rn : rn_grid)
    for (double cj : cj_grid)
      map.ec.push_back(coupling_efficiency(zr, z_junction({rn, cj}, f_hz)));
  return map;
}

double charging_energy_from_capacitance_hz(double c_f) {
  if (!(c_f > 0.0)) throw validation_error("capacitance must be > 0");
  const double e = cs::kElectronCharge;
  return e * e / (2.0 * c_f) / cs::kPlanck;
}

ImpedanceTable::ImpedanceTable(std::vector<double> f_hz,
                               std::vector<complex<double>> z)
    : f_hz_(std::move(f_hz)), z_(std::move(z)) {
  if (f_hz_.size() != z_.size() || f_hz_.size() < 2)
    throw validation_error("impedance table: need >= 2 matching samples");
  for (std::size_t i = 0; i < f_hz_.size(); ++i) {
    if (!(f_hz_[i] > 0.0))
      throw validation_error("impedance table: frequencies must be > 0");
    if (i > 0 && !(f_hz_[i] > f_hz_[i - 1]))
      throw validation_error("impedance table: frequencies must be strictly increasing");
  }
}

ImpedanceTable ImpedanceTable::load(const std::filesystem::path& path) {
  const TsvTable t = read_tsv(path);
  if (t.columns.size() != 2 && t.columns.size() != 3)
    throw validation_error(path.string() +
                           ": impedance table needs 2 or 3 columns "
                           "(frequency_hz, re_ohm[, im_ohm])");
  std::vector<double> f;
  std::vector<complex<double>> z;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    f.push_back(t.number(r, 0));
    const double re = t.number(r, 1);
    const double im = t.columns.size() == 3 ? t.number(r, 2) : 0.0;
    z.emplace_back(re, im);
  }
  return ImpedanceTable(std::move(f), std::move(z));
}

complex<double> ImpedanceTable::interpolate(double f_hz) const {
  if (f_hz < f_hz_.front() || f_hz > f_hz_.back())
    throw validation_error("impedance table: frequency outside tabulated range");
  const auto it = std::lower_bound(f_hz_.begin(), f_hz_.end(), f_hz);
  const std::size_t hi = static_cast<std::size_t>(it - f_hz_.begin());
  if (hi == 0 || f_hz_[hi] == f_hz) return z_[hi];
  const std::size_t lo = hi - 1;
  const double w = (f_hz - f_hz_[lo]) / (f_hz_[hi] - f_hz_[lo]);
  return z_[lo] + w * (z_[hi] - z_[lo]);
}

double integrated_efficiency(const EquivCircuit& circuit,
                             const JunctionParams& junction, double f_lo_hz,
                             double f_hi_hz, double t_rad_k) {
  if (!(f_hi_hz > f_lo_hz) || !(f_lo_hz > 0.0))
    throw validation_error("integrated_efficiency: bad frequency window");
  if (!(t_rad_k > 0.0))
    throw validation_error("integrated_efficiency: temperature must be > 0");
  const double beta = cs::kPlanck / (cs::kBoltzmann * t_rad_k);
  // Simpson rule; the weight is referenced to f_lo so the ratio never
  // underflows.
  const int n = 2000;  // even
  const double df = (f_hi_hz - f_lo_hz) / n;
  double num = 0.0, den = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double f = f_lo_hz + i * df;
    const double w = std::exp(-beta * (f - f_lo_hz));
    const double ec =
        coupling_efficiency(z_rad(circuit, f), z_junction(junction, f));
    const double simp = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    num += simp * w * ec;
    den += simp * w;
  }
  return num / den;
}

} // namespace qparity
