#ifndef QPARITY_TRIDIAG_HPP
#define QPARITY_TRIDIAG_HPP

#include <span>
#include <vector>

namespace qparity {

struct TridiagGround {
  long double energy = 0.0L;     // lowest eigenvalue
  long double gap = 0.0L;        // second eigenvalue minus lowest
  std::vector<double> vector;    // normalized; largest-|amplitude| entry positive
};

/// Lowest eigenpair of a symmetric tridiagonal matrix. Eigenvalue by Sturm
/// bisection in extended precision, eigenvector by inverse iteration.
TridiagGround tridiag_ground(std::span<const double> diag,
                             std::span<const double> off);

/// Two lowest eigenvalues in extended precision (no eigenvectors).
std::pair<long double, long double> tridiag_two_lowest_precise(
    std::span<const double> diag, std::span<const double> off);

/// Lowest k eigenvalues, ascending (double precision).
std::vector<double> tridiag_lowest(std::span<const double> diag,
                                   std::span<const double> off, int k);

} // namespace qparity

#endif
