#include "qparity/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "qparity/errors.hpp"
#include "qparity/tridiag.hpp"

namespace qparity {
namespace {

constexpr int kCutoffCap = 2048;

void validate(const QubitParams& p) {
  if (!(p.ej_hz >= 0.0)) throw validation_error("qubit: E_J must be >= 0");
  if (!(p.ec_hz > 0.0)) throw validation_error("qubit: E_C must be > 0");
  if (p.cutoff < 10) throw validation_error("qubit: cutoff must be >= 10");
}

// Electron-number lattice k in [-cutoff, cutoff] restricted to the parity
// sector (even/odd k). H = E_C (k - 2 ng)^2 - (E_J/2) * (hop by 2), which per
// sector is the generalized Cooper-pair-box Hamiltonian.
struct Sector {
  int k_first = 0;  // smallest lattice site in the sector
  std::vector<double> diag;
  std::vector<double> off;
};

Sector build_sector(const QubitParams& p, Parity parity, int cutoff) {
  Sector s;
  const int parity_bit = parity == Parity::even ? 0 : 1;
  int k0 = -cutoff;
  if (((k0 % 2) + 2) % 2 != parity_bit) ++k0;
  s.k_first = k0;
  for (int k = k0; k <= cutoff; k += 2)
    s.diag.push_back(p.ec_hz * (k - 2.0 * p.ng) * (k - 2.0 * p.ng));
  s.off.assign(s.diag.size() - 1, -0.5 * p.ej_hz);
  return s;
}

TridiagGround sector_ground(const QubitParams& p, Parity parity, int cutoff) {
  const Sector s = build_sector(p, parity, cutoff);
  return tridiag_ground(s.diag, s.off);
}

// Doubles the cutoff until `value` changes by less than a mixed
// relative/absolute tolerance, returning the converged evaluation.
// noise_coeff models the solver roundoff floor, which grows with the
// largest diagonal entry E_C * cutoff^2; without it, eigenvalue noise on
// near-degenerate quantities would masquerade as non-convergence.
template <typename F>
auto converge_cutoff(const QubitParams& p, double abs_scale, double noise_coeff,
                     F&& value) {
  int cutoff = std::max(p.cutoff, 10);
  auto prev = value(cutoff);
  while (cutoff < kCutoffCap) {
    const int next = std::min(2 * cutoff, kCutoffCap);
    auto cur = value(next);
    const double floor = noise_coeff * p.ec_hz * static_cast<double>(next) *
                         static_cast<double>(next);
    bool ok = true;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      const double change = std::fabs(static_cast<double>(cur[i] - prev[i]));
      const double scale = std::max(
          {std::fabs(static_cast<double>(cur[i])), abs_scale, 1e-300});
      if (change > 1e-10 * scale + floor) ok = false;
    }
    if (ok) return cur;
    cutoff = next;
    prev = std::move(cur);
  }
  throw convergence_error(
      "spectrum: cutoff cap reached without convergence; increase cutoff or "
      "check E_J/E_C");
}

} // namespace

Parity parse_parity(const std::string& tag) {
  if (tag == "even") return Parity::even;
  if (tag == "odd") return Parity::odd;
  throw validation_error("invalid parity tag '" + tag + "' (want even|odd)");
}

const char* parity_name(Parity p) { return p == Parity::even ? "even" : "odd"; }

std::vector<double> eigenlevels(const QubitParams& params, Parity parity, int k) {
  validate(params);
  if (k < 1) throw validation_error("eigenlevels: need k >= 1");
  if (k > 2 * params.cutoff - 2)
    throw validation_error("eigenlevels: k exceeds 2*cutoff - 2");
  const auto levels = [&](int cutoff) {
    const Sector s = build_sector(params, parity, cutoff);
    return tridiag_lowest(s.diag, s.off, k);
  };
  // absolute floor well below any physical level spacing
  const double abs_scale = 1e-6 * params.ec_hz;
  return converge_cutoff(params, abs_scale, 5e-14, levels);
}

ParitySpectrum parity_spectrum(const QubitParams& params, int k) {
  ParitySpectrum out;
  out.even_levels = eigenlevels(params, Parity::even, k);
  out.odd_levels = eigenlevels(params, Parity::odd, k);
  out.ng = params.ng;
  return out;
}

double transition_frequency(const QubitParams& params, Parity parity) {
  const auto lv = eigenlevels(params, parity, 2);
  return lv[1] - lv[0];
}

double epsilon0(const QubitParams& params) {
  validate(params);
  const auto eps = [&](int cutoff) {
    const auto even = sector_ground(params, Parity::even, cutoff);
    const auto odd = sector_ground(params, Parity::odd, cutoff);
    const long double diff = odd.energy - even.energy;
    return std::vector<long double>{diff < 0 ? -diff : diff};
  };
  const double abs_scale = 1e-12 * params.ec_hz;
  return static_cast<double>(converge_cutoff(params, abs_scale, 5e-18, eps)[0]);
}

double cos_half_phi_element(const QubitParams& params) {
  validate(params);
  const auto element = [&](int cutoff) {
    const Sector se = build_sector(params, Parity::even, cutoff);
    const Sector so = build_sector(params, Parity::odd, cutoff);
    const auto ge = tridiag_ground(se.diag, se.off);
    const auto go = tridiag_ground(so.diag, so.off);
    const double gap_scale = std::max(params.ec_hz, params.ej_hz);
    if (ge.gap < 1e-12L * gap_scale || go.gap < 1e-12L * gap_scale)
      throw degeneracy_error(
          "cos_half_phi_element: degenerate ground state (E_J = 0 at this ng)");
    // cos(phi/2) hops k by +-1 with amplitude 1/2; overlap the even ground
    // with the shifted odd ground.
    double acc = 0.0;
    const auto odd_index = [&](int k) { return (k - so.k_first) / 2; };
    const int n_odd = static_cast<int>(go.vector.size());
    for (std::size_t i = 0; i < ge.vector.size(); ++i) {
      const int k = se.k_first + 2 * static_cast<int>(i);
      for (int kk : {k - 1, k + 1}) {
        const int j = odd_index(kk);
        if (kk >= so.k_first && j >= 0 && j < n_odd)
          acc += ge.vector[i] * 0.5 * go.vector[static_cast<std::size_t>(j)];
      }
    }
    return std::vector<long double>{std::fabs(static_cast<long double>(acc))};
  };
  const double c0 =
      static_cast<double>(converge_cutoff(params, 1.0, 5e-18, element)[0]);
  return std::min(c0, 1.0);
}

namespace {

// Transition frequency through the extended-precision eigenvalue path, for
// the finite differences below (the plain double route leaves ~10 Hz of
// solver noise, which a 1e-6 Richardson criterion cannot tolerate).
long double transition_precise(const QubitParams& params, Parity parity) {
  const auto f01 = [&](int cutoff) {
    const Sector s = build_sector(params, parity, cutoff);
    const auto [e0, e1] = tridiag_two_lowest_precise(s.diag, s.off);
    return std::vector<long double>{e1 - e0};
  };
  QubitParams p = params;
  return converge_cutoff(p, 1e-6 * params.ec_hz, 5e-18, f01)[0];
}

} // namespace

Derivative charge_dispersion_slope(const QubitParams& params, Parity parity) {
  validate(params);
  const auto f = [&](double ng) {
    QubitParams p = params;
    p.ng = ng;
    return transition_precise(p, parity);
  };
  const double h = 1e-4;
  Derivative d;
  d.value = static_cast<double>((f(params.ng + h) - f(params.ng - h)) /
                                (2.0L * h));
  d.half_step_value = static_cast<double>(
      (f(params.ng + 0.5 * h) - f(params.ng - 0.5 * h)) / h);
  // zero slope at a band extremum must pass; judge agreement against a
  // floor tied to the qubit energy scale
  const double floor = 1e-4 * std::max(params.ec_hz, params.ej_hz);
  const double scale =
      std::max({std::fabs(d.value), std::fabs(d.half_step_value), floor});
  d.richardson_rel = std::fabs(d.value - d.half_step_value) / scale;
  d.richardson_ok = d.richardson_rel < 1e-6;
  return d;
}

double dressed_resonator_frequency(const CoupledSystem& sys, Parity parity,
                                   QubitState state) {
  validate(sys.qubit);
  if (!(sys.g_hz >= 0.0)) throw validation_error("coupled system: g must be >= 0");
  if (!(sys.fr_bare_hz > 0.0))
    throw validation_error("coupled system: resonator frequency must be > 0");
  if (sys.g_hz == 0.0) return sys.fr_bare_hz;

  const double fq = transition_frequency(sys.qubit, parity);
  const double fr = sys.fr_bare_hz;
  const double g = sys.g_hz;
  if (std::fabs(fr - fq) <= g)
    throw degeneracy_error(
        "dressed_resonator_frequency: qubit-resonator detuning within g "
        "(vacuum-Rabi degeneracy)");

  // One-excitation manifold {|g,1>, |e,0>}; the resonator-like branch is the
  // one adiabatically connected to |g,1>.
  const double half = 0.5 * (fq - fr);
  const double s1 = std::sqrt(half * half + g * g);
  const double e_g1 = 0.5 * (fr + fq) + (fr < fq ? -s1 : s1);
  if (state == QubitState::ground) return e_g1;  // minus E(g,0) = 0

  const double e_e0 = 0.5 * (fr + fq) + (fr < fq ? s1 : -s1);
  // Two-excitation manifold {|g,2>, |e,1>} with coupling sqrt(2) g.
  const double s2 = std::sqrt(half * half + 2.0 * g * g);
  const double e_e1 = 0.5 * (3.0 * fr + fq) + (fq < fr ? -s2 : s2);
  return e_e1 - e_e0;
}

std::vector<SpectrumRow> spectrum_vs_ng(const QubitParams& params,
                                        std::span<const double> ng_grid,
                                        std::span<const Parity> parities,
                                        std::span<const LevelPair> pairs) {
  validate(params);
  if (ng_grid.empty()) throw validation_error("spectrum_vs_ng: empty grid");
  if (parities.empty() || pairs.empty())
    throw validation_error("spectrum_vs_ng: need at least one parity and pair");
  int max_level = 0;
  for (const auto& pr : pairs) {
    if (pr.lower < 0 || pr.upper <= pr.lower)
      throw validation_error("spectrum_vs_ng: bad level pair");
    max_level = std::max(max_level, pr.upper);
  }
  std::vector<SpectrumRow> rows;
  rows.reserve(ng_grid.size());
  for (double ng : ng_grid) {
    QubitParams p = params;
    p.ng = ng;
    SpectrumRow row;
    row.ng = ng;
    for (Parity parity : parities) {
      const auto lv = eigenlevels(p, parity, max_level + 1);
      auto& dst = parity == Parity::even ? row.even_hz : row.odd_hz;
      for (const auto& pr : pairs)
        dst.push_back(lv[static_cast<std::size_t>(pr.upper)] -
                      lv[static_cast<std::size_t>(pr.lower)]);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace qparity
