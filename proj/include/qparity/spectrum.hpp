#ifndef QPARITY_SPECTRUM_HPP
#define QPARITY_SPECTRUM_HPP

#include <span>
#include <string>
#include <vector>

#include "qparity/fdiff.hpp"

namespace qparity {

enum class Parity { even, odd };
enum class QubitState { ground, excited };

Parity parse_parity(const std::string& tag);
const char* parity_name(Parity p);

/// Charge-regime qubit parameters. Energies are ordinary frequencies
/// (E/h, in Hz); ng is the offset charge in units of 2e. cutoff is the
/// half-width of the electron-number lattice; it is doubled automatically
/// until the requested quantity is converged (hard cap 2048).
struct QubitParams {
  double ej_hz = 0.0;
  double ec_hz = 0.0;
  double ng = 0.0;
  int cutoff = 60;
};

struct ParitySpectrum {
  std::vector<double> even_levels;  // Hz, ascending
  std::vector<double> odd_levels;
  double ng = 0.0;
};

struct CoupledSystem {
  QubitParams qubit;
  double g_hz = 0.0;        // qubit-resonator coupling g/2pi
  double fr_bare_hz = 0.0;  // bare resonator frequency
};

/// Lowest k eigenvalues of the parity sector, in Hz, ascending.
std::vector<double> eigenlevels(const QubitParams& params, Parity parity, int k);

ParitySpectrum parity_spectrum(const QubitParams& params, int k);

/// g-e transition frequency for the given parity at params.ng.
double transition_frequency(const QubitParams& params, Parity parity);

/// Ground-state splitting |E_g(odd) - E_g(even)| / h, in Hz, at params.ng.
double epsilon0(const QubitParams& params);

/// Matrix element |<g_even| cos(phi/2) |g_odd>| on the electron-number
/// lattice, in [0, 1]. Throws degeneracy_error when either ground state is
/// degenerate (E_J = 0 at ng = 0).
double cos_half_phi_element(const QubitParams& params);

/// d f_ge / d ng at params.ng by central differences (step 1e-4),
/// with the halved-step Richardson check reported.
Derivative charge_dispersion_slope(const QubitParams& params, Parity parity);

/// Dressed resonator frequency from the exact two-level Jaynes-Cummings
/// diagonalization, one value per (parity, qubit state). Requires the
/// qubit-resonator detuning to exceed g.
double dressed_resonator_frequency(const CoupledSystem& sys, Parity parity,
                                   QubitState state);

struct SpectrumRow {
  double ng;
  std::vector<double> even_hz;  // one per requested level pair
  std::vector<double> odd_hz;
};

struct LevelPair {
  int lower = 0;
  int upper = 1;
};

/// Transition-frequency table over an ng grid for both parities.
std::vector<SpectrumRow> spectrum_vs_ng(const QubitParams& params,
                                        std::span<const double> ng_grid,
                                        std::span<const Parity> parities,
                                        std::span<const LevelPair> pairs);

} // namespace qparity

#endif
