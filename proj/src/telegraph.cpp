#include "qparity/telegraph.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

#include "qparity/constants.hpp"
#include "qparity/errors.hpp"
#include "qparity/fft.hpp"
#include "qparity/levmar.hpp"

namespace qparity {
namespace cs = constants;

bool TelegraphTrace::is_classified() const {
  return std::all_of(samples.begin(), samples.end(),
                     [](double v) { return v == 1.0 || v == -1.0; });
}

TelegraphTrace simulate_rts(double gamma_p_hz, double duration_s, double dt_s,
                            RngStream& rng) {
  if (!(gamma_p_hz >= 0.0)) throw validation_error("simulate_rts: rate must be >= 0");
  if (!(dt_s > 0.0) || !(duration_s > 0.0))
    throw validation_error("simulate_rts: need positive duration and dt");
  if (gamma_p_hz * dt_s >= 0.1)
    throw validation_error(
        "simulate_rts: gamma_p * dt must be < 0.1 for the sampling to resolve "
        "switches");
  const auto n = static_cast<std::size_t>(std::llround(duration_s / dt_s));
  if (n == 0) throw validation_error("simulate_rts: empty trace");

  TelegraphTrace trace;
  trace.dt_s = dt_s;
  trace.origin = TraceOrigin::simulated;
  trace.samples.resize(n);

  double state = rng.uniform01() <= 0.5 ? 1.0 : -1.0;
  if (gamma_p_hz == 0.0) {
    std::fill(trace.samples.begin(), trace.samples.end(), state);
    return trace;
  }
  std::size_t i = 0;
  double t_switch = rng.exponential(gamma_p_hz);
  while (i < n) {
    // samples at times i*dt up to the next switch
    auto j = static_cast<std::size_t>(std::floor(t_switch / dt_s)) + 1;
    j = std::clamp(j, i, n);
    std::fill(trace.samples.begin() + static_cast<std::ptrdiff_t>(i),
              trace.samples.begin() + static_cast<std::ptrdiff_t>(j), state);
    i = j;
    state = -state;
    t_switch += rng.exponential(gamma_p_hz);
  }
  return trace;
}

TelegraphTrace inject_readout_noise(const TelegraphTrace& trace, double sigma,
                                    double excitation_prob, RngStream& rng,
                                    double outlier_level) {
  if (!(sigma >= 0.0)) throw validation_error("inject_readout_noise: sigma must be >= 0");
  if (!(excitation_prob >= 0.0 && excitation_prob <= 0.1))
    throw validation_error("inject_readout_noise: excitation_prob must be in [0, 0.1]");
  TelegraphTrace out = trace;
  for (double& v : out.samples) {
    if (excitation_prob > 0.0 && rng.uniform01() <= excitation_prob) {
      v = outlier_level;
      continue;
    }
    if (sigma > 0.0) v += sigma * rng.normal();
  }
  return out;
}

TelegraphTrace moving_median(const TelegraphTrace& trace, int window) {
  if (window < 1) throw validation_error("moving_median: window must be >= 1");
  const auto n = static_cast<std::ptrdiff_t>(trace.samples.size());
  TelegraphTrace out = trace;
  if (window == 1 || n == 0) return out;
  const std::ptrdiff_t half_lo = (window - 1) / 2;
  const std::ptrdiff_t half_hi = window / 2;
  std::vector<double> buf;
  buf.reserve(static_cast<std::size_t>(window));
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, i - half_lo);
    const std::ptrdiff_t hi = std::min(n - 1, i + half_hi);
    buf.assign(trace.samples.begin() + lo, trace.samples.begin() + hi + 1);
    // even windows: lower median, except an exact two-way tie keeps the
    // current sample -- a pure lower median would creep telegraph edges by
    // one sample per pass and break idempotence on clean +-1 traces
    const std::ptrdiff_t len = static_cast<std::ptrdiff_t>(buf.size());
    const auto mid_lo = buf.begin() + (len - 1) / 2;
    std::nth_element(buf.begin(), mid_lo, buf.end());
    double value = *mid_lo;
    if (len % 2 == 0) {
      const double upper = *std::min_element(mid_lo + 1, buf.end());
      const double cur = trace.samples[static_cast<std::size_t>(i)];
      if (upper != value && (cur == value || cur == upper)) value = cur;
    }
    out.samples[static_cast<std::size_t>(i)] = value;
  }
  return out;
}

namespace {

Classification classify_with_threshold(const TelegraphTrace& raw,
                                       double threshold, bool warn) {
  Classification c;
  c.trace = raw;
  c.threshold = threshold;
  c.unimodal_warning = warn;
  for (double& v : c.trace.samples) v = v >= threshold ? 1.0 : -1.0;
  return c;
}

} // namespace

Classification classify_parity(const TelegraphTrace& raw, double threshold) {
  if (raw.samples.empty()) throw validation_error("classify_parity: empty trace");
  return classify_with_threshold(raw, threshold, false);
}

Classification classify_parity(const TelegraphTrace& raw) {
  const auto& x = raw.samples;
  if (x.empty()) throw validation_error("classify_parity: empty trace");
  if (raw.is_classified()) {
    Classification c;
    c.trace = raw;
    c.threshold = 0.0;
    c.unimodal_warning =
        std::all_of(x.begin(), x.end(), [&](double v) { return v == x[0]; });
    return c;
  }

  // exact two-cluster split of the sorted values minimizing within-cluster
  // sum of squares
  std::vector<double> sorted = x;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  std::vector<double> prefix(n + 1, 0.0), prefix2(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    prefix[i + 1] = prefix[i] + sorted[i];
    prefix2[i + 1] = prefix2[i] + sorted[i] * sorted[i];
  }
  const auto sse = [&](std::size_t a, std::size_t b) {  // [a, b)
    const double cnt = static_cast<double>(b - a);
    const double s = prefix[b] - prefix[a];
    return (prefix2[b] - prefix2[a]) - s * s / cnt;
  };
  std::size_t best = 1;
  double best_sse = std::numeric_limits<double>::max();
  for (std::size_t k = 1; k < n; ++k) {
    const double v = sse(0, k) + sse(k, n);
    if (v < best_sse) {
      best_sse = v;
      best = k;
    }
  }
  const double mean_lo = prefix[best] / static_cast<double>(best);
  const double mean_hi =
      (prefix[n] - prefix[best]) / static_cast<double>(n - best);
  const double threshold = 0.5 * (mean_lo + mean_hi);
  const double pooled_var = best_sse / static_cast<double>(n);
  const double separation = mean_hi - mean_lo;
  const double range = sorted.back() - sorted.front();
  const bool warn =
      range <= 0.0 ||
      separation < 2.0 * std::sqrt(std::max(pooled_var, 0.0)) +
                       1e-12 * std::max(std::fabs(sorted.back()),
                                        std::fabs(sorted.front()));
  return classify_with_threshold(raw, threshold, warn);
}

PsdAccumulator::PsdAccumulator(bool hann_window) : hann_(hann_window) {}
PsdAccumulator::~PsdAccumulator() = default;

void PsdAccumulator::add(const TelegraphTrace& trace) {
  if (trace.samples.size() < 2)
    throw validation_error("psd: trace too short");
  if (!(trace.dt_s > 0.0)) throw validation_error("psd: dt must be > 0");
  if (count_ == 0) {
    dt_s_ = trace.dt_s;
    n_samples_ = trace.samples.size();
    fft_ = std::make_unique<RealFft>(n_samples_);
    acc_.assign(n_samples_ / 2 + 1, 0.0);
    if (hann_) {
      window_.resize(n_samples_);
      double p = 0.0;
      for (std::size_t i = 0; i < n_samples_; ++i) {
        window_[i] = 0.5 * (1.0 - std::cos(2.0 * cs::kPi * i /
                                           static_cast<double>(n_samples_ - 1)));
        p += window_[i] * window_[i];
      }
      window_power_ = p / static_cast<double>(n_samples_);
    }
  } else {
    if (trace.dt_s != dt_s_)
      throw validation_error("psd: mixed sample rates in ensemble");
    if (trace.samples.size() != n_samples_)
      throw validation_error("psd: mixed trace lengths in ensemble");
  }

  const double mean =
      std::accumulate(trace.samples.begin(), trace.samples.end(), 0.0) /
      static_cast<double>(n_samples_);
  std::vector<double> x(n_samples_);
  for (std::size_t i = 0; i < n_samples_; ++i) {
    x[i] = trace.samples[i] - mean;
    if (hann_) x[i] *= window_[i];
  }
  const std::vector<double> p = fft_->power(x);
  for (std::size_t k = 0; k < acc_.size(); ++k) acc_[k] += p[k];
  ++count_;
}

PsdEstimate PsdAccumulator::estimate() const {
  if (count_ == 0) throw validation_error("psd: no traces accumulated");
  PsdEstimate est;
  est.n_averages = count_;
  const double nd = static_cast<double>(n_samples_);
  const double df = 1.0 / (nd * dt_s_);
  const double norm = dt_s_ / (nd * window_power_) / static_cast<double>(count_);
  const std::size_t kmax = n_samples_ / 2;
  for (std::size_t k = 1; k <= kmax; ++k) {
    est.frequencies.push_back(static_cast<double>(k) * df);
    const bool nyquist = (n_samples_ % 2 == 0) && k == kmax;
    est.power.push_back(acc_[k] * norm * (nyquist ? 1.0 : 2.0));
  }
  return est;
}

PsdEstimate psd_estimate(const std::vector<TelegraphTrace>& traces,
                         bool concatenate, bool hann_window) {
  if (traces.empty()) throw validation_error("psd: no traces");
  if (concatenate) {
    TelegraphTrace joined;
    joined.dt_s = traces.front().dt_s;
    joined.origin = traces.front().origin;
    std::size_t total = 0;
    for (const auto& t : traces) {
      if (t.dt_s != joined.dt_s)
        throw validation_error("psd: mixed sample rates in ensemble");
      total += t.samples.size();
    }
    joined.samples.reserve(total);
    for (const auto& t : traces)
      joined.samples.insert(joined.samples.end(), t.samples.begin(),
                            t.samples.end());
    PsdAccumulator acc(hann_window);
    acc.add(joined);
    return acc.estimate();
  }
  PsdAccumulator acc(hann_window);
  for (const auto& t : traces) acc.add(t);
  return acc.estimate();
}

RtsFit fit_lorentzian(const PsdEstimate& psd) {
  const std::size_t n = psd.frequencies.size();
  if (n < 8)
    throw validation_error("fit_lorentzian: need >= 8 frequency bins");
  for (double p : psd.power)
    if (!(p > 0.0))
      throw validation_error("fit_lorentzian: power must be positive");

  const auto& f = psd.frequencies;
  const auto& s = psd.power;

  // floor from the top 20% of the band (median), plateau from the lowest bins
  std::vector<double> tail(s.end() - static_cast<std::ptrdiff_t>(
                                         std::max<std::size_t>(n / 5, 1)),
                           s.end());
  std::nth_element(tail.begin(), tail.begin() + tail.size() / 2, tail.end());
  double b0 = tail[tail.size() / 2];
  const std::size_t n_low = std::min<std::size_t>(4, n);
  double plateau = 0.0;
  for (std::size_t i = 0; i < n_low; ++i) plateau += s[i];
  plateau /= static_cast<double>(n_low);
  double s0 = plateau - b0;
  if (!(s0 > 0.0)) s0 = std::max(plateau * 0.5, 1e-30);
  b0 = std::max(b0, 1e-12 * plateau);

  double gamma0 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (s[i] - b0 < 0.5 * s0) {
      gamma0 = cs::kPi * f[i];
      break;
    }
  }
  if (gamma0 <= 0.0) gamma0 = cs::kPi * f[n / 2];
  gamma0 = std::clamp(gamma0, 0.05 * cs::kPi * f.front(), cs::kPi * f.back());
  const double a0 = s0 * gamma0;

  FitProblem problem;
  const auto log_param = [](const char* name, double initial) {
    FitParam p;
    p.name = name;
    p.initial = initial;
    p.log_scale = true;
    return p;
  };
  problem.params = {log_param("gamma", gamma0), log_param("A", a0),
                    log_param("B", b0)};
  problem.residual = [&f, &s](std::span<const double> p) {
    std::vector<double> r(f.size());
    const double g = p[0], a = p[1], b = p[2];
    for (std::size_t i = 0; i < f.size(); ++i) {
      const double w = 2.0 * cs::kPi * f[i];
      const double model = a * 4.0 * g / (4.0 * g * g + w * w) + b;
      r[i] = std::log(model) - std::log(s[i]);
    }
    return r;
  };

  const FitResult fit = levmar_fit(problem);
  if (!fit.converged) throw convergence_error("fit_lorentzian: " + fit.message);

  RtsFit out;
  out.gamma_p_hz = fit.estimates[0];
  out.amplitude = fit.estimates[1];
  out.offset = fit.estimates[2];
  out.gamma_err = fit.std_errors[0];
  out.covariance = fit.covariance;
  const double knee = out.gamma_p_hz / cs::kPi;
  out.knee_outside_band = knee < f.front() || knee > f.back();
  return out;
}

AcfAccumulator::AcfAccumulator(double max_lag_s) : max_lag_s_(max_lag_s) {
  if (!(max_lag_s > 0.0))
    throw validation_error("autocorrelation: max lag must be > 0");
}
AcfAccumulator::~AcfAccumulator() = default;

void AcfAccumulator::add(const TelegraphTrace& trace) {
  if (!trace.is_classified())
    throw validation_error("autocorrelation: input must be a classified +-1 trace");
  if (count_ == 0) {
    dt_s_ = trace.dt_s;
    n_samples_ = trace.samples.size();
    n_lags_ = static_cast<std::size_t>(std::floor(max_lag_s_ / dt_s_));
    if (n_lags_ + 1 > n_samples_) n_lags_ = n_samples_ - 1;
    short_warning_ = max_lag_s_ > trace.duration_s() / 10.0;
    std::size_t m = 1;
    while (m < 2 * n_samples_) m <<= 1;
    fft_ = std::make_unique<RealFft>(m);
    acc_.assign(n_lags_ + 1, 0.0);
  } else {
    if (trace.dt_s != dt_s_ || trace.samples.size() != n_samples_)
      throw validation_error("autocorrelation: mixed traces in ensemble");
  }
  const std::vector<double> raw =
      fft_->autocorrelation_raw(trace.samples, n_lags_);
  // biased estimator: divide by N, not by the per-lag count
  for (std::size_t l = 0; l <= n_lags_; ++l)
    acc_[l] += raw[l] / static_cast<double>(n_samples_);
  ++count_;
}

Autocorrelation AcfAccumulator::estimate() const {
  if (count_ == 0) throw validation_error("autocorrelation: no traces");
  Autocorrelation out;
  out.short_trace_warning = short_warning_;
  const double norm = acc_[0];
  for (std::size_t l = 0; l < acc_.size(); ++l) {
    out.lags_s.push_back(static_cast<double>(l) * dt_s_);
    out.values.push_back(acc_[l] / norm);
  }
  return out;
}

Autocorrelation autocorrelation(const TelegraphTrace& trace, double max_lag_s) {
  AcfAccumulator acc(max_lag_s);
  acc.add(trace);
  return acc.estimate();
}

Autocorrelation autocorrelation(const std::vector<TelegraphTrace>& traces,
                                double max_lag_s) {
  if (traces.empty()) throw validation_error("autocorrelation: no traces");
  AcfAccumulator acc(max_lag_s);
  for (const auto& t : traces) acc.add(t);
  return acc.estimate();
}

double fit_exponential_rate(const Autocorrelation& acf) {
  if (acf.values.size() < 3)
    throw validation_error("fit_exponential_rate: too few lags");
  // use lags down to where the estimator noise takes over
  std::vector<double> tau, val;
  for (std::size_t i = 0; i < acf.values.size(); ++i) {
    if (acf.values[i] < 0.05) break;
    tau.push_back(acf.lags_s[i]);
    val.push_back(acf.values[i]);
  }
  if (tau.size() < 3)
    throw convergence_error("fit_exponential_rate: no usable decay range");
  const double span = tau.back() - tau.front();
  // a constant trace leaves only the linear estimator taper, no decay to fit
  if (!(span > 0.0) || val.back() > 0.9)
    throw convergence_error("fit_exponential_rate: zero decay");

  double gamma0 = -std::log(std::max(val.back(), 1e-12)) / (2.0 * tau.back());
  gamma0 = std::max(gamma0, 1e-6 / span);

  FitProblem problem;
  FitParam g;
  g.name = "gamma";
  g.initial = gamma0;
  g.log_scale = true;
  problem.params = {g};
  problem.residual = [&tau, &val](std::span<const double> p) {
    std::vector<double> r(tau.size());
    for (std::size_t i = 0; i < tau.size(); ++i)
      r[i] = std::exp(-2.0 * p[0] * tau[i]) - val[i];
    return r;
  };
  const FitResult fit = levmar_fit(problem);
  if (!fit.converged)
    throw convergence_error("fit_exponential_rate: " + fit.message);
  return fit.estimates[0];
}

double count_switches(const TelegraphTrace& trace) {
  if (!trace.is_classified())
    throw validation_error("count_switches: input must be a classified +-1 trace");
  const auto& x = trace.samples;
  if (x.size() < 2) return 0.0;
  std::size_t changes = 0;
  for (std::size_t i = 1; i < x.size(); ++i)
    if (x[i] != x[i - 1]) ++changes;
  return static_cast<double>(changes) /
         (static_cast<double>(x.size() - 1) * trace.dt_s);
}

double count_switches(const std::vector<TelegraphTrace>& traces) {
  if (traces.empty()) throw validation_error("count_switches: no traces");
  double changes = 0.0, time = 0.0;
  for (const auto& t : traces) {
    if (!t.is_classified())
      throw validation_error("count_switches: input must be a classified +-1 trace");
    for (std::size_t i = 1; i < t.samples.size(); ++i)
      if (t.samples[i] != t.samples[i - 1]) changes += 1.0;
    time += static_cast<double>(t.samples.size() - 1) * t.dt_s;
  }
  if (!(time > 0.0)) return 0.0;
  return changes / time;
}

JumpScan detect_charge_jumps(std::span<const double> time_s,
                             std::span<const double> ng_e, double threshold_e) {
  if (time_s.size() != ng_e.size())
    throw validation_error("detect_charge_jumps: size mismatch");
  if (time_s.size() < 2)
    throw validation_error("detect_charge_jumps: need >= 2 samples");
  if (!(threshold_e > 0.0))
    throw validation_error("detect_charge_jumps: threshold must be > 0");
  for (std::size_t i = 1; i < time_s.size(); ++i)
    if (!(time_s[i] > time_s[i - 1]))
      throw validation_error("detect_charge_jumps: samples must be time ordered");

  JumpScan scan;
  scan.span_s = time_s.back() - time_s.front();
  for (std::size_t i = 1; i < ng_e.size(); ++i) {
    // offsets are 1e-periodic between parities; wrap to the minimal image
    double step = ng_e[i] - ng_e[i - 1];
    step -= std::round(step);
    if (std::fabs(step) > threshold_e)
      scan.events.push_back({time_s[i], step});
  }
  scan.rate_hz = static_cast<double>(scan.events.size()) / scan.span_s;
  return scan;
}

double ramsey_excited_population(double qubit_hz, double drive_hz, double tau_s) {
  // pi/2 about x, free evolution (phase = 2 pi detuning tau about z),
  // pi/2 about y; closed form: P_e = (1 + sin phi) / 2
  const double phi = 2.0 * cs::kPi * (qubit_hz - drive_hz) * tau_s;
  return 0.5 * (1.0 + std::sin(phi));
}

RamseyMapping ramsey_parity_map(double omega_e_hz, double omega_o_hz) {
  if (omega_e_hz == omega_o_hz)
    throw degeneracy_error("ramsey_parity_map: parity frequencies are degenerate");
  RamseyMapping m;
  m.drive_hz = 0.5 * (omega_e_hz + omega_o_hz);
  m.tau_s = 1.0 / (2.0 * std::fabs(omega_e_hz - omega_o_hz));
  m.fidelity_even_excited =
      ramsey_excited_population(omega_e_hz, m.drive_hz, m.tau_s);
  m.fidelity_odd_ground =
      1.0 - ramsey_excited_population(omega_o_hz, m.drive_hz, m.tau_s);
  return m;
}

} // namespace qparity
