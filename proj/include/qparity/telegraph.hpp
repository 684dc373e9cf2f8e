#ifndef QPARITY_TELEGRAPH_HPP
#define QPARITY_TELEGRAPH_HPP

#include <Eigen/Dense>
#include <memory>
#include <span>
#include <vector>

#include "qparity/rng.hpp"

namespace qparity {

class RealFft;

enum class TraceOrigin { simulated, measured };

struct TelegraphTrace {
  double dt_s = 0.0;
  std::vector<double> samples;
  TraceOrigin origin = TraceOrigin::measured;

  double duration_s() const { return dt_s * static_cast<double>(samples.size()); }
  bool is_classified() const;  // every sample exactly +-1
};

/// Symmetric two-state continuous-time Markov chain with per-direction
/// switching rate gamma_p, sampled at dt. gamma_p is the mean observed
/// switch-event rate; the autocorrelation decays as exp(-2 gamma_p tau).
/// Requires gamma_p * dt < 0.1 so sampling resolves the switches.
TelegraphTrace simulate_rts(double gamma_p_hz, double duration_s, double dt_s,
                            RngStream& rng);

/// White Gaussian readout noise plus, with probability excitation_prob per
/// sample, replacement by an outlier level (spurious excitation).
TelegraphTrace inject_readout_noise(const TelegraphTrace& trace, double sigma,
                                    double excitation_prob, RngStream& rng,
                                    double outlier_level = 3.0);

/// Sliding median, length preserved, shrinking window at the edges.
/// Even windows use the lower-median convention.
TelegraphTrace moving_median(const TelegraphTrace& trace, int window = 10);

struct Classification {
  TelegraphTrace trace;      // +-1 samples
  double threshold = 0.0;
  bool unimodal_warning = false;
};

/// Two-cluster 1D split minimizing within-cluster variance; threshold at the
/// midpoint of the cluster means. Values at or above map to +1. Inputs that
/// are already +-1 pass through unchanged.
Classification classify_parity(const TelegraphTrace& raw);
Classification classify_parity(const TelegraphTrace& raw, double threshold);

struct PsdEstimate {
  std::vector<double> frequencies;  // Hz, positive, ascending, uniform
  std::vector<double> power;        // one-sided density
  int n_averages = 0;
  double df_hz() const { return frequencies.size() > 1 ? frequencies[1] - frequencies[0] : 0.0; }
};

/// Streaming Bartlett average of per-trace periodograms (mean removed,
/// optional Hann window). All traces must share dt and length.
class PsdAccumulator {
 public:
  explicit PsdAccumulator(bool hann_window = false);
  ~PsdAccumulator();
  void add(const TelegraphTrace& trace);
  PsdEstimate estimate() const;

 private:
  bool hann_;
  double dt_s_ = 0.0;
  std::size_t n_samples_ = 0;
  int count_ = 0;
  std::vector<double> acc_;
  std::vector<double> window_;
  double window_power_ = 1.0;
  std::unique_ptr<RealFft> fft_;
};

/// Bartlett average over an ensemble; with concatenate the traces are joined
/// end to end first, extending coverage to lower frequencies.
PsdEstimate psd_estimate(const std::vector<TelegraphTrace>& traces,
                         bool concatenate = false, bool hann_window = false);

struct RtsFit {
  double gamma_p_hz = 0.0;
  double amplitude = 0.0;  // A
  double offset = 0.0;     // white-noise floor B
  double gamma_err = 0.0;
  Eigen::Matrix3d covariance = Eigen::Matrix3d::Zero();  // (gamma, A, B)
  bool knee_outside_band = false;
  double tp_s() const { return 1.0 / gamma_p_hz; }
};

/// Least-squares fit of S(f) = A 4 Gamma / ((2 Gamma)^2 + (2 pi f)^2) + B
/// with all three parameters kept positive by log-parameterization.
RtsFit fit_lorentzian(const PsdEstimate& psd);

struct Autocorrelation {
  std::vector<double> lags_s;   // starting at 0
  std::vector<double> values;   // exactly 1 at lag 0
  bool short_trace_warning = false;
};

/// Biased normalized estimator <P(0) P(tau)> for classified traces.
Autocorrelation autocorrelation(const TelegraphTrace& trace, double max_lag_s);

class AcfAccumulator {
 public:
  explicit AcfAccumulator(double max_lag_s);
  ~AcfAccumulator();
  void add(const TelegraphTrace& trace);
  Autocorrelation estimate() const;

 private:
  double max_lag_s_;
  double dt_s_ = 0.0;
  std::size_t n_samples_ = 0;
  std::size_t n_lags_ = 0;
  int count_ = 0;
  bool short_warning_ = false;
  std::vector<double> acc_;
  std::unique_ptr<RealFft> fft_;
};

Autocorrelation autocorrelation(const std::vector<TelegraphTrace>& traces,
                                double max_lag_s);

/// Fit exp(-2 gamma tau) to a normalized autocorrelation; returns gamma.
double fit_exponential_rate(const Autocorrelation& acf);

/// Sign changes per unit time of a classified trace.
double count_switches(const TelegraphTrace& trace);
double count_switches(const std::vector<TelegraphTrace>& traces);

struct ChargeJump {
  double time_s = 0.0;
  double amplitude_e = 0.0;  // minimal-image offset step, in e
};

struct JumpScan {
  std::vector<ChargeJump> events;
  double span_s = 0.0;
  double rate_hz = 0.0;
};

/// Discrete offset-charge jumps: consecutive-sample differences wrapped to
/// the +-0.5e minimal image, events where |step| exceeds the threshold.
JumpScan detect_charge_jumps(std::span<const double> time_s,
                             std::span<const double> ng_e,
                             double threshold_e = 0.1);

struct RamseyMapping {
  double drive_hz = 0.0;              // (f_even + f_odd) / 2
  double tau_s = 0.0;                 // 1 / (2 |f_even - f_odd|)
  double fidelity_even_excited = 0.0;
  double fidelity_odd_ground = 0.0;
};

/// Conditional bit flip mapping parity onto the qubit state: drive at the
/// midpoint frequency, free evolution accumulating a relative phase of pi
/// between the parity branches, fidelities from the closed-form two-level
/// evolution with ideal pulses.
RamseyMapping ramsey_parity_map(double omega_e_hz, double omega_o_hz);

/// Final excited-state population of the mapping sequence for a qubit of the
/// given frequency (Ramsey with a pi/2 x-pulse, free evolution tau, pi/2
/// y-pulse), exposed for phase-accumulation checks.
double ramsey_excited_population(double qubit_hz, double drive_hz, double tau_s);

} // namespace qparity

#endif
