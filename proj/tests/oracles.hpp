#ifndef QPARITY_TESTS_ORACLES_HPP
#define QPARITY_TESTS_ORACLES_HPP

#include "qparity/spectrum.hpp"

namespace qparity::oracles {

/// e^x K_nu(x) by adaptive quadrature of the integral representation
/// K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt. Test-side reference,
/// independent of the series/Chebyshev implementation.
double bessel_k_scaled_quadrature(int nu, double x);

/// Ground-state splitting from the Cooper-pair (pair-number) basis of the
/// generalized Cooper-pair-box Hamiltonian: even sector 4 E_C (n - ng)^2,
/// odd sector 4 E_C (n - ng + 1/2)^2, both with hopping -E_J/2. A distinct
/// floating-point route from the electron-lattice representation.
double epsilon0_pair_basis(const QubitParams& params);

} // namespace qparity::oracles

#endif
