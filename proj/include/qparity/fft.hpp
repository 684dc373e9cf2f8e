#ifndef QPARITY_FFT_HPP
#define QPARITY_FFT_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qparity {

/// Real-input FFT backed by FFTW (deterministic ESTIMATE plans).
/// One instance per transform length; reusable across calls.
class RealFft {
 public:
  explicit RealFft(std::size_t n);
  ~RealFft();
  RealFft(const RealFft&) = delete;
  RealFft& operator=(const RealFft&) = delete;

  std::size_t size() const { return n_; }

  /// Forward transform; returns n/2+1 complex bins.
  std::vector<std::complex<double>> forward(std::span<const double> in);

  /// Power spectrum |X_k|^2 of the (optionally zero-padded) input.
  std::vector<double> power(std::span<const double> in);

  /// Circular autocorrelation numerator via FFT: IFFT(|FFT(x)|^2) / n,
  /// returned for lags 0..max_lag. Zero-pad the input to at least twice the
  /// signal length to obtain linear correlation.
  std::vector<double> autocorrelation_raw(std::span<const double> in,
                                          std::size_t max_lag);

 private:
  std::size_t n_;
  void* plan_fwd_;   // fftw_plan
  void* plan_inv_;
  double* real_buf_;
  void* cplx_buf_;   // fftw_complex*
};

} // namespace qparity

#endif
