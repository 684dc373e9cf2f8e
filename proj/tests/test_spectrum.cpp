#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qparity/errors.hpp"
#include "qparity/rng.hpp"
#include "qparity/spectrum.hpp"

using namespace qparity;

namespace {

double rel(double a, double b) {
  return std::fabs(a - b) / std::max({std::fabs(a), std::fabs(b), 1e-300});
}

QubitParams qubit(double ej_ghz, double ec_ghz, double ng = 0.0) {
  QubitParams q;
  q.ej_hz = ej_ghz * 1e9;
  q.ec_hz = ec_ghz * 1e9;
  q.ng = ng;
  return q;
}

} // namespace

TEST_CASE("charging parabola at E_J = 0") {
  const auto lv = eigenlevels(qubit(0.0, 1.0), Parity::even, 2);
  CHECK(std::fabs(lv[0]) < 1.0);                 // ground at k = 0
  CHECK(std::fabs(lv[1] - 4e9) < 1.0);           // k = +-2 doublet
}

TEST_CASE("ground-state splitting against the fitted table rows") {
  // S1-Q1
  CHECK(rel(epsilon0(qubit(4.67, 1.40)), 0.238e9) < 0.01);
  // S1-Q2
  CHECK(rel(epsilon0(qubit(4.27, 1.48)), 0.319e9) < 0.01);
  // S4-Q3: deep dispersion regime, table precision dominates
  const double e_s4q3 = epsilon0(qubit(12.25, 0.44));
  CHECK(e_s4q3 / 2.18e4 < 1.5);
  CHECK(e_s4q3 / 2.18e4 > 1.0 / 1.5);
  // S5-Q3
  const double e_s5q3 = epsilon0(qubit(14.66, 0.37));
  CHECK(e_s5q3 / 1.6e3 < 1.5);
  CHECK(e_s5q3 / 1.6e3 > 1.0 / 1.5);
}

TEST_CASE("epsilon0 approaches E_C in the free-charge limit") {
  const double e = epsilon0(qubit(1e-4, 1.0));
  CHECK(rel(e, 1e9) < 1e-3);
}

TEST_CASE("transition frequencies at ng = 0 for S1-Q1") {
  CHECK(rel(transition_frequency(qubit(4.67, 1.40), Parity::even), 6.833e9) <
        0.01);
  CHECK(rel(transition_frequency(qubit(4.67, 1.40), Parity::odd), 4.473e9) <
        0.01);
}

TEST_CASE("1e shift exchanges the parities") {
  const QubitParams base = qubit(4.67, 1.40, 0.13);
  QubitParams shifted = base;
  shifted.ng = base.ng + 0.5;
  CHECK(rel(transition_frequency(shifted, Parity::even),
            transition_frequency(base, Parity::odd)) < 1e-9);
  const auto even_shifted = eigenlevels(shifted, Parity::even, 4);
  const auto odd_base = eigenlevels(base, Parity::odd, 4);
  for (int i = 0; i < 4; ++i) CHECK(rel(even_shifted[i], odd_base[i]) < 1e-9);
}

TEST_CASE("2e periodicity of spectral outputs") {
  RngStream rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const double ej = 1.0 + 10.0 * rng.uniform01();
    const double ec = 0.4 + 1.2 * rng.uniform01();
    const double ng = rng.uniform01() - 0.5;
    const QubitParams a = qubit(ej, ec, ng);
    QubitParams b = a;
    b.ng = ng + 1.0;
    CHECK(rel(epsilon0(a), epsilon0(b)) < 1e-9);
    for (Parity p : {Parity::even, Parity::odd})
      CHECK(rel(transition_frequency(a, p), transition_frequency(b, p)) < 1e-9);
  }
}

TEST_CASE("matrix element against the fitted table rows") {
  const auto c0sq = [](double ej, double ec) {
    const double c = cos_half_phi_element(qubit(ej, ec));
    return c * c;
  };
  CHECK(rel(c0sq(4.67, 1.40), 0.775) < 0.02);  // S1-Q1
  CHECK(rel(c0sq(12.25, 0.44), 0.931) < 0.02); // S4-Q3
  CHECK(rel(c0sq(2.35, 1.29), 0.691) < 0.02);  // S8-Q2
}

TEST_CASE("matrix element range and monotonicity in E_J/E_C") {
  // rows ordered by increasing E_J/E_C ratio (1.82 up to 39.6)
  const double rows[][2] = {{2.35, 1.29}, {2.23, 0.95}, {4.67, 1.40},
                            {7.61, 1.30}, {4.45, 0.66}, {4.71, 0.59},
                            {4.84, 0.49}, {5.79, 0.46}, {12.25, 0.44},
                            {14.66, 0.37}};
  double prev = 0.0;
  for (const auto& row : rows) {
    const double c0 = cos_half_phi_element(qubit(row[0], row[1]));
    CHECK(c0 >= 0.0);
    CHECK(c0 <= 1.0);
    CHECK(c0 * c0 > prev);
    prev = c0 * c0;
  }
}

TEST_CASE("degenerate odd ground state is rejected") {
  CHECK_THROWS_AS(cos_half_phi_element(qubit(0.0, 1.0)), degeneracy_error);
}

TEST_CASE("cutoff convergence of ground-state quantities") {
  // doubling the starting cutoff moves epsilon0 and c0 by less than 1e-8
  // relative, including the deep-dispersion corner of the table
  const double rows[][2] = {{4.67, 1.40}, {14.66, 0.37}, {15.31, 0.40},
                            {2.35, 1.29}};
  for (const auto& row : rows) {
    QubitParams narrow = qubit(row[0], row[1]);
    QubitParams wide = narrow;
    wide.cutoff = 2 * narrow.cutoff;
    CHECK(rel(epsilon0(narrow), epsilon0(wide)) < 1e-8);
    CHECK(std::fabs(cos_half_phi_element(narrow) -
                    cos_half_phi_element(wide)) < 1e-8);
  }
}

TEST_CASE("electron-lattice and pair-basis routes agree") {
  const double rows[][2] = {{4.67, 1.40}, {2.35, 1.29}, {12.25, 0.44}};
  for (const auto& row : rows) {
    const QubitParams q = qubit(row[0], row[1]);
    CHECK(rel(epsilon0(q), oracles::epsilon0_pair_basis(q)) < 1e-9);
  }
}

TEST_CASE("dispersion slope vanishes at the sweet spot and is odd in ng") {
  const QubitParams q = qubit(4.67, 1.40);
  const Derivative at_zero = charge_dispersion_slope(q, Parity::even);
  CHECK(std::fabs(at_zero.value) < 1e-4 * q.ec_hz);
  CHECK(at_zero.richardson_ok);

  QubitParams plus = q, minus = q;
  plus.ng = 0.17;
  minus.ng = -0.17;
  const double sp = charge_dispersion_slope(plus, Parity::odd).value;
  const double sm = charge_dispersion_slope(minus, Parity::odd).value;
  CHECK(rel(sp, -sm) < 1e-6);
}

TEST_CASE("dispersion slope matches a brute-force secant") {
  QubitParams q = qubit(4.67, 1.40);
  q.ng = 0.25;
  const Derivative slope = charge_dispersion_slope(q, Parity::even);
  const double h = 1e-6;
  QubitParams a = q, b = q;
  a.ng = q.ng - h;
  b.ng = q.ng + h;
  const double secant = (transition_frequency(b, Parity::even) -
                         transition_frequency(a, Parity::even)) /
                        (2.0 * h);
  CHECK(rel(slope.value, secant) < 1e-6);
  CHECK(slope.richardson_ok);
}

TEST_CASE("dressed resonator in the decoupled limit") {
  CoupledSystem sys;
  sys.qubit = qubit(4.67, 1.40);
  sys.g_hz = 0.0;
  sys.fr_bare_hz = 5.556e9;
  for (Parity p : {Parity::even, Parity::odd})
    for (QubitState s : {QubitState::ground, QubitState::excited})
      CHECK(dressed_resonator_frequency(sys, p, s) == 5.556e9);
}

TEST_CASE("dressed resonator four-state pattern for S1-Q1") {
  CoupledSystem sys;
  sys.qubit = qubit(4.67, 1.40);
  sys.g_hz = 24.3e6;
  sys.fr_bare_hz = 5.556e9;
  const double g_even =
      dressed_resonator_frequency(sys, Parity::even, QubitState::ground);
  const double g_odd =
      dressed_resonator_frequency(sys, Parity::odd, QubitState::ground);
  const double e_even =
      dressed_resonator_frequency(sys, Parity::even, QubitState::excited);
  const double e_odd =
      dressed_resonator_frequency(sys, Parity::odd, QubitState::excited);
  // even-parity qubit sits above the resonator, odd below: red/blue shifts
  CHECK(g_even < sys.fr_bare_hz);
  CHECK(g_odd > sys.fr_bare_hz);
  CHECK(g_even < g_odd);
  // near-degenerate pairs seen in readout
  CHECK(std::fabs(g_odd - e_even) < 0.2e6);
  CHECK(std::fabs(g_even - e_odd) < 0.2e6);
}

TEST_CASE("dressed resonator rejects the vacuum-Rabi degeneracy") {
  CoupledSystem sys;
  sys.qubit = qubit(4.67, 1.40);
  sys.g_hz = 24.3e6;
  // park the bare resonator right on the even transition
  sys.fr_bare_hz = transition_frequency(sys.qubit, Parity::even);
  CHECK_THROWS_AS(
      dressed_resonator_frequency(sys, Parity::even, QubitState::ground),
      degeneracy_error);
}

TEST_CASE("spectrum table consistency, periodicity and extremum") {
  const QubitParams q = qubit(4.67, 1.40);
  const Parity parities[] = {Parity::even, Parity::odd};
  const LevelPair pairs[] = {{0, 1}};

  const double single[] = {0.2};
  const auto one = spectrum_vs_ng(q, single, parities, pairs);
  QubitParams at = q;
  at.ng = 0.2;
  CHECK(rel(one[0].even_hz[0], transition_frequency(at, Parity::even)) < 1e-12);

  std::vector<double> grid, shifted;
  for (int i = 0; i <= 100; ++i) {
    grid.push_back(-1.0 + 0.02 * i);
    shifted.push_back(-1.0 + 0.02 * i + 1.0);
  }
  const auto base = spectrum_vs_ng(q, grid, parities, pairs);
  const auto moved = spectrum_vs_ng(q, shifted, parities, pairs);
  double max_even = 0.0;
  std::size_t argmax = 0;
  for (std::size_t i = 0; i < base.size(); ++i) {
    CHECK(rel(base[i].even_hz[0], moved[i].even_hz[0]) < 1e-9);
    CHECK(rel(base[i].odd_hz[0], moved[i].odd_hz[0]) < 1e-9);
    if (base[i].even_hz[0] > max_even) {
      max_even = base[i].even_hz[0];
      argmax = i;
    }
  }
  // even branch peaks at integer ng (sweet spot, 1-periodic per parity)
  CHECK(std::fabs(grid[argmax] - std::round(grid[argmax])) < 1e-12);
  QubitParams sweet = q;
  sweet.ng = 0.0;
  CHECK(rel(max_even, transition_frequency(sweet, Parity::even)) < 1e-9);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(eigenlevels(qubit(-1.0, 1.0), Parity::even, 2),
                  validation_error);
  CHECK_THROWS_AS(eigenlevels(qubit(1.0, 0.0), Parity::even, 2),
                  validation_error);
  QubitParams q = qubit(1.0, 1.0);
  q.cutoff = 4;
  CHECK_THROWS_AS(eigenlevels(q, Parity::even, 2), validation_error);
  CHECK_THROWS_AS(eigenlevels(qubit(1.0, 1.0), Parity::even, 300),
                  validation_error);
  CHECK_THROWS_AS(parse_parity("sideways"), validation_error);
  CHECK(parse_parity("even") == Parity::even);
  CHECK(parse_parity("odd") == Parity::odd);
}
