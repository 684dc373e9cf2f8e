#include "qparity/tridiag.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "qparity/errors.hpp"

namespace qparity {
namespace {

// Number of eigenvalues strictly below x (Sturm count via LDL^T pivots).
int sturm_count(std::span<const long double> d, std::span<const long double> e,
                long double x) {
  const std::size_t n = d.size();
  constexpr long double tiny = std::numeric_limits<long double>::min() * 4.0L;
  int count = 0;
  long double q = d[0] - x;
  if (q < 0) ++count;
  for (std::size_t i = 1; i < n; ++i) {
    if (q == 0.0L) q = tiny;
    q = d[i] - x - e[i - 1] * e[i - 1] / q;
    if (q < 0) ++count;
  }
  return count;
}

// k-th (0-based) eigenvalue by bisection to extended precision.
long double bisect_eigenvalue(std::span<const long double> d,
                              std::span<const long double> e, int k,
                              long double lo, long double hi) {
  for (int it = 0; it < 200; ++it) {
    const long double mid = 0.5L * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (sturm_count(d, e, mid) > k)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5L * (lo + hi);
}

} // namespace

TridiagGround tridiag_ground(std::span<const double> diag,
                             std::span<const double> off) {
  const std::size_t n = diag.size();
  if (n < 2 || off.size() != n - 1)
    throw validation_error("tridiag_ground: bad dimensions");

  std::vector<long double> d(diag.begin(), diag.end());
  std::vector<long double> e(off.begin(), off.end());

  // Gershgorin bounds
  long double lo = d[0], hi = d[0];
  for (std::size_t i = 0; i < n; ++i) {
    long double r = 0.0L;
    if (i > 0) r += std::fabs(e[i - 1]);
    if (i + 1 < n) r += std::fabs(e[i]);
    lo = std::min(lo, d[i] - r);
    hi = std::max(hi, d[i] + r);
  }

  TridiagGround g;
  g.energy = bisect_eigenvalue(d, e, 0, lo, hi);
  const long double second = bisect_eigenvalue(d, e, 1, g.energy, hi);
  g.gap = second - g.energy;

  // Inverse iteration at a slightly shifted eigenvalue estimate.
  const long double span = hi - lo;
  const long double shift = g.energy - 1e-14L * span - 1e-30L;
  std::vector<long double> v(n, 1.0L / std::sqrt(static_cast<long double>(n)));
  for (int pass = 0; pass < 3; ++pass) {
    // Thomas solve (T - shift I) w = v; zero pivots guarded since the shift
    // sits next to an eigenvalue.
    std::vector<long double> c(n - 1), dd(n), w(n);
    constexpr long double tiny = 1e-40L;
    dd[0] = d[0] - shift;
    if (std::fabs(dd[0]) < tiny) dd[0] = tiny;
    c[0] = e[0] / dd[0];
    w[0] = v[0] / dd[0];
    for (std::size_t i = 1; i < n; ++i) {
      dd[i] = d[i] - shift - e[i - 1] * c[i - 1];
      if (std::fabs(dd[i]) < tiny) dd[i] = tiny;
      if (i + 1 < n) c[i] = e[i] / dd[i];
      w[i] = (v[i] - e[i - 1] * w[i - 1]) / dd[i];
    }
    for (std::size_t i = n - 1; i-- > 0;) w[i] -= c[i] * w[i + 1];
    long double norm = 0.0L;
    for (auto x : w) norm += x * x;
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / norm;
  }

  // Fix the sign: largest-magnitude amplitude positive.
  std::size_t imax = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (std::fabs(v[i]) > std::fabs(v[imax])) imax = i;
  const long double sgn = v[imax] < 0 ? -1.0L : 1.0L;
  g.vector.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    g.vector[i] = static_cast<double>(sgn * v[i]);
  return g;
}

std::pair<long double, long double> tridiag_two_lowest_precise(
    std::span<const double> diag, std::span<const double> off) {
  const std::size_t n = diag.size();
  if (n < 2 || off.size() != n - 1)
    throw validation_error("tridiag_two_lowest_precise: bad dimensions");
  std::vector<long double> d(diag.begin(), diag.end());
  std::vector<long double> e(off.begin(), off.end());
  long double lo = d[0], hi = d[0];
  for (std::size_t i = 0; i < n; ++i) {
    long double r = 0.0L;
    if (i > 0) r += std::fabs(e[i - 1]);
    if (i + 1 < n) r += std::fabs(e[i]);
    lo = std::min(lo, d[i] - r);
    hi = std::max(hi, d[i] + r);
  }
  const long double first = bisect_eigenvalue(d, e, 0, lo, hi);
  const long double second = bisect_eigenvalue(d, e, 1, first, hi);
  return {first, second};
}

std::vector<double> tridiag_lowest(std::span<const double> diag,
                                   std::span<const double> off, int k) {
  const auto n = static_cast<Eigen::Index>(diag.size());
  if (k < 1 || k > n) throw validation_error("tridiag_lowest: bad level count");
  Eigen::VectorXd d = Eigen::Map<const Eigen::VectorXd>(diag.data(), n);
  Eigen::VectorXd e =
      Eigen::Map<const Eigen::VectorXd>(off.data(), n > 1 ? n - 1 : 0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(d, e, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw convergence_error("tridiag_lowest: eigensolver failed");
  std::vector<double> out(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) out[static_cast<std::size_t>(i)] = solver.eigenvalues()[i];
  return out;
}

} // namespace qparity
