#include <doctest.h>

#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "qparity/bessel.hpp"
#include "qparity/errors.hpp"
#include "qparity/fdiff.hpp"
#include "qparity/levmar.hpp"
#include "qparity/rng.hpp"

using namespace qparity;

namespace {
double rel(double a, double b) {
  return std::fabs(a - b) / std::max({std::fabs(a), std::fabs(b), 1e-300});
}
} // namespace

TEST_CASE("bessel reference values") {
  CHECK(rel(bessel_k0(1.0), 0.42102443824070834) < 1e-12);
  CHECK(rel(bessel_k1(1.0), 0.6019072301972346) < 1e-12);
}

TEST_CASE("bessel matches the quadrature oracle on a log grid") {
  // 200 points over [1e-3, 700]
  for (int i = 0; i < 200; ++i) {
    const double x =
        1e-3 * std::pow(700.0 / 1e-3, static_cast<double>(i) / 199.0);
    const double k0e = oracles::bessel_k_scaled_quadrature(0, x);
    const double k1e = oracles::bessel_k_scaled_quadrature(1, x);
    CHECK(rel(bessel_k0_scaled(x), k0e) < 1e-12);
    CHECK(rel(bessel_k1_scaled(x), k1e) < 1e-12);
  }
}

TEST_CASE("bessel limits") {
  // x K1(x) -> 1 as x -> 0
  CHECK(std::fabs(1e-6 * bessel_k1(1e-6) - 1.0) < 1e-6);
  // K1/K0 -> 1 for large argument
  CHECK(std::fabs(bessel_k1_scaled(500.0) / bessel_k0_scaled(500.0) - 1.0) <
        1e-3);
}

TEST_CASE("bessel underflow flag and domain") {
  bool under = false;
  CHECK(bessel_k0(800.0, &under) == 0.0);
  CHECK(under);
  CHECK(bessel_k1(100.0, &under) > 0.0);
  CHECK(!under);
  CHECK_THROWS_AS(bessel_k0(0.0), validation_error);
  CHECK_THROWS_AS(bessel_k1(-1.0), validation_error);
}

TEST_CASE("rng reproducibility and stream independence") {
  RngStream a(42, 0), b(42, 0);
  for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());

  auto streams = RngStream::streams(42, 2);
  CHECK(streams[0].seed() == 42);
  CHECK(streams[1].stream() == 1);
  const int n = 10000;
  std::vector<double> x(n), y(n);
  for (int i = 0; i < n; ++i) {
    x[i] = streams[0].uniform01();
    y[i] = streams[1].uniform01();
  }
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (int i = 0; i < n; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  CHECK(std::fabs(sxy / std::sqrt(sxx * syy)) < 0.05);

  // streams(seed, n)[i] matches direct construction with the same index
  auto fresh = RngStream::streams(42, 3);
  RngStream direct(42, 2);
  CHECK(direct.next_u64() == fresh[2].next_u64());
}

TEST_CASE("rng exponential moment") {
  RngStream rng(7);
  const double rate = 3.0;
  const int n = 1000000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += rng.exponential(rate);
  CHECK(std::fabs(sum / n - 1.0 / rate) < 0.01 / rate);
}

TEST_CASE("rng uniform01 range and normal moments") {
  RngStream rng(9);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform01();
    CHECK(u > 0.0);
    CHECK(u <= 1.0);
  }
  double sum = 0, sum2 = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double z = rng.normal();
    sum += z;
    sum2 += z * z;
  }
  CHECK(std::fabs(sum / n) < 0.01);
  CHECK(std::fabs(sum2 / n - 1.0) < 0.02);
}

TEST_CASE("central differences") {
  const auto sq = [](double x) { return x * x; };
  const Derivative d1 = central_difference(sq, 3.0, 1e-5);
  CHECK(std::fabs(d1.value - 6.0) < 1e-10);
  CHECK(d1.richardson_ok);

  const Derivative d2 = central_difference([](double x) { return std::sin(x); },
                                           0.0, 1e-5);
  CHECK(std::fabs(d2.value - 1.0) < 1e-10);
  CHECK(d2.richardson_ok);

  // kink at the evaluation point: the halved-step check must fail
  const Derivative d3 = central_difference(
      [](double x) { return std::fabs(x - 1e-6); }, 0.0, 1e-5);
  CHECK(!d3.richardson_ok);

  CHECK_THROWS_AS(central_difference([](double x) { return std::log(x); },
                                     0.0, 1.0),
                  validation_error);
}

TEST_CASE("levmar linear model converges in a few iterations") {
  // y = a x + b sampled exactly
  std::vector<double> xs(20), ys(20);
  for (int i = 0; i < 20; ++i) {
    xs[i] = i * 0.5;
    ys[i] = 2.5 * xs[i] - 1.25;
  }
  FitProblem problem;
  FitParam a, b;
  a.name = "a";
  a.initial = 0.0;
  b.name = "b";
  b.initial = 0.0;
  problem.params = {a, b};
  problem.residual = [&](std::span<const double> p) {
    std::vector<double> r(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
      r[i] = p[0] * xs[i] + p[1] - ys[i];
    return r;
  };
  const FitResult fit = levmar_fit(problem);
  CHECK(fit.converged);
  CHECK(fit.iterations <= 3);
  CHECK(std::fabs(fit.estimates[0] - 2.5) < 1e-9);
  CHECK(std::fabs(fit.estimates[1] + 1.25) < 1e-9);
}

TEST_CASE("levmar rosenbrock benchmark") {
  FitProblem problem;
  FitParam x, y;
  x.name = "x";
  x.initial = -1.2;
  y.name = "y";
  y.initial = 1.0;
  problem.params = {x, y};
  problem.residual = [](std::span<const double> p) {
    return std::vector<double>{10.0 * (p[1] - p[0] * p[0]), 1.0 - p[0]};
  };
  const FitResult fit = levmar_fit(problem);
  CHECK(fit.converged);
  CHECK(std::fabs(fit.estimates[0] - 1.0) < 1e-8);
  CHECK(std::fabs(fit.estimates[1] - 1.0) < 1e-8);
}

TEST_CASE("levmar accepted cost history never increases") {
  FitProblem problem;
  FitParam x, y;
  x.name = "x";
  x.initial = -1.2;
  y.name = "y";
  y.initial = 1.0;
  problem.params = {x, y};
  problem.residual = [](std::span<const double> p) {
    return std::vector<double>{10.0 * (p[1] - p[0] * p[0]), 1.0 - p[0]};
  };
  const FitResult fit = levmar_fit(problem);
  for (std::size_t i = 1; i < fit.cost_history.size(); ++i)
    CHECK(fit.cost_history[i] <= fit.cost_history[i - 1]);
}

TEST_CASE("levmar shared parameter matches a brute-force grid search") {
  // two datasets y_i(t) = a_i exp(-k t) sharing the decay constant k
  const double k_true = 0.8, a1 = 2.0, a2 = 0.5;
  std::vector<double> ts(15);
  for (int i = 0; i < 15; ++i) ts[i] = 0.2 * i;
  std::vector<double> y1(ts.size()), y2(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    y1[i] = a1 * std::exp(-k_true * ts[i]);
    y2[i] = a2 * std::exp(-k_true * ts[i]);
  }

  FitProblem problem;
  FitParam pa1, pk1, pa2, pk2;
  pa1.name = "a1";
  pa1.initial = 1.0;
  pa2.name = "a2";
  pa2.initial = 1.0;
  pk1.name = "k1";
  pk1.initial = 0.3;
  pk1.share_tag = "k";
  pk2.name = "k2";
  pk2.initial = 0.3;
  pk2.share_tag = "k";
  problem.params = {pa1, pk1, pa2, pk2};
  problem.residual = [&](std::span<const double> p) {
    std::vector<double> r;
    for (std::size_t i = 0; i < ts.size(); ++i)
      r.push_back(p[0] * std::exp(-p[1] * ts[i]) - y1[i]);
    for (std::size_t i = 0; i < ts.size(); ++i)
      r.push_back(p[2] * std::exp(-p[3] * ts[i]) - y2[i]);
    return r;
  };
  const FitResult fit = levmar_fit(problem);
  CHECK(fit.converged);
  CHECK(fit.estimates[1] == fit.estimates[3]);  // tied variable

  // grid over k, amplitudes by closed-form linear least squares
  double best_k = 0, best_cost = 1e300;
  for (int g = 0; g <= 2000; ++g) {
    const double k = 0.2 + g * (1.6 - 0.2) / 2000.0;
    double num1 = 0, den = 0, num2 = 0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const double e = std::exp(-k * ts[i]);
      num1 += y1[i] * e;
      num2 += y2[i] * e;
      den += e * e;
    }
    const double c1 = num1 / den, c2 = num2 / den;
    double cost = 0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const double e = std::exp(-k * ts[i]);
      cost += (c1 * e - y1[i]) * (c1 * e - y1[i]);
      cost += (c2 * e - y2[i]) * (c2 * e - y2[i]);
    }
    if (cost < best_cost) {
      best_cost = cost;
      best_k = k;
    }
  }
  CHECK(std::fabs(fit.estimates[1] - best_k) < (1.6 - 0.2) / 2000.0);
  CHECK(std::fabs(fit.estimates[1] - k_true) < 1e-6);
}

TEST_CASE("levmar bounds and validation") {
  FitProblem problem;
  FitParam p;
  p.name = "p";
  p.initial = 0.5;
  p.lower = 0.0;
  p.upper = 1.0;
  problem.params = {p};
  problem.residual = [](std::span<const double> q) {
    return std::vector<double>{q[0] - 5.0, 0.1 * q[0]};
  };
  const FitResult fit = levmar_fit(problem);
  CHECK(fit.estimates[0] <= 1.0);
  CHECK(fit.estimates[0] >= 0.0);

  FitProblem bad = problem;
  bad.residual = [](std::span<const double>) {
    return std::vector<double>{std::nan("")};
  };
  CHECK_THROWS_AS(levmar_fit(bad), validation_error);
}
