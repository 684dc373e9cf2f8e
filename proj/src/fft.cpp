#include "qparity/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cstring>

#include "qparity/errors.hpp"

namespace qparity {

RealFft::RealFft(std::size_t n) : n_(n) {
  if (n < 2) throw validation_error("RealFft: length must be >= 2");
  real_buf_ = fftw_alloc_real(n);
  cplx_buf_ = fftw_alloc_complex(n / 2 + 1);
  if (!real_buf_ || !cplx_buf_) throw std::bad_alloc();
  plan_fwd_ = fftw_plan_dft_r2c_1d(static_cast<int>(n), real_buf_,
                                   static_cast<fftw_complex*>(cplx_buf_),
                                   FFTW_ESTIMATE);
  plan_inv_ = fftw_plan_dft_c2r_1d(static_cast<int>(n),
                                   static_cast<fftw_complex*>(cplx_buf_),
                                   real_buf_, FFTW_ESTIMATE);
}

RealFft::~RealFft() {
  fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_inv_));
  fftw_free(real_buf_);
  fftw_free(cplx_buf_);
}

namespace {
void load_padded(std::span<const double> in, double* buf, std::size_t n) {
  if (in.size() > n) throw validation_error("RealFft: input longer than plan");
  std::memcpy(buf, in.data(), in.size() * sizeof(double));
  std::fill(buf + in.size(), buf + n, 0.0);
}
} // namespace

std::vector<std::complex<double>> RealFft::forward(std::span<const double> in) {
  load_padded(in, real_buf_, n_);
  fftw_execute(static_cast<fftw_plan>(plan_fwd_));
  const auto* c = static_cast<const fftw_complex*>(cplx_buf_);
  std::vector<std::complex<double>> out(n_ / 2 + 1);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = {c[k][0], c[k][1]};
  return out;
}

std::vector<double> RealFft::power(std::span<const double> in) {
  load_padded(in, real_buf_, n_);
  fftw_execute(static_cast<fftw_plan>(plan_fwd_));
  const auto* c = static_cast<const fftw_complex*>(cplx_buf_);
  std::vector<double> out(n_ / 2 + 1);
  for (std::size_t k = 0; k < out.size(); ++k)
    out[k] = c[k][0] * c[k][0] + c[k][1] * c[k][1];
  return out;
}

std::vector<double> RealFft::autocorrelation_raw(std::span<const double> in,
                                                 std::size_t max_lag) {
  load_padded(in, real_buf_, n_);
  fftw_execute(static_cast<fftw_plan>(plan_fwd_));
  auto* c = static_cast<fftw_complex*>(cplx_buf_);
  for (std::size_t k = 0; k < n_ / 2 + 1; ++k) {
    c[k][0] = c[k][0] * c[k][0] + c[k][1] * c[k][1];
    c[k][1] = 0.0;
  }
  fftw_execute(static_cast<fftw_plan>(plan_inv_));
  const std::size_t m = std::min(max_lag, n_ - 1);
  std::vector<double> out(m + 1);
  // FFTW's c2r is unnormalized: divide by n
  for (std::size_t l = 0; l <= m; ++l) out[l] = real_buf_[l] / static_cast<double>(n_);
  return out;
}

} // namespace qparity
