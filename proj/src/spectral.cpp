#include "nlslab/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <utility>

namespace nlslab {

Fft1d::Fft1d(std::size_t n) : n_(n) {
  require(n > 0, "Fft1d: length must be positive");
  buffer_ = reinterpret_cast<cplx*>(fftw_alloc_complex(n));
  auto* buf = reinterpret_cast<fftw_complex*>(buffer_);
  const int len = static_cast<int>(n);
  forward_plan_ = fftw_plan_dft_1d(len, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
  backward_plan_ = fftw_plan_dft_1d(len, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
}

Fft1d::~Fft1d() { release(); }

Fft1d::Fft1d(Fft1d&& other) noexcept
    : n_(std::exchange(other.n_, 0)),
      buffer_(std::exchange(other.buffer_, nullptr)),
      forward_plan_(std::exchange(other.forward_plan_, nullptr)),
      backward_plan_(std::exchange(other.backward_plan_, nullptr)) {}

Fft1d& Fft1d::operator=(Fft1d&& other) noexcept {
  if (this != &other) {
    release();
    n_ = std::exchange(other.n_, 0);
    buffer_ = std::exchange(other.buffer_, nullptr);
    forward_plan_ = std::exchange(other.forward_plan_, nullptr);
    backward_plan_ = std::exchange(other.backward_plan_, nullptr);
  }
  return *this;
}

void Fft1d::release() {
  if (forward_plan_) fftw_destroy_plan(static_cast<fftw_plan>(forward_plan_));
  if (backward_plan_) fftw_destroy_plan(static_cast<fftw_plan>(backward_plan_));
  if (buffer_) fftw_free(buffer_);
  forward_plan_ = backward_plan_ = nullptr;
  buffer_ = nullptr;
}

void Fft1d::execute(void* plan, std::span<cplx> data) const {
  require(data.size() == n_, "Fft1d: buffer length does not match the plan");
  std::copy(data.begin(), data.end(), buffer_);
  fftw_execute(static_cast<fftw_plan>(plan));
  std::copy(buffer_, buffer_ + n_, data.begin());
}

void Fft1d::forward(std::span<cplx> data) const { execute(forward_plan_, data); }

void Fft1d::backward(std::span<cplx> data) const { execute(backward_plan_, data); }

std::size_t good_fft_size(std::size_t n) {
  auto smooth = [](std::size_t m) {
    for (std::size_t f : {2u, 3u, 5u})
      while (m % f == 0) m /= f;
    return m == 1;
  };
  std::size_t m = std::max<std::size_t>(n, 1);
  while (!smooth(m)) ++m;
  return m;
}

}  // namespace nlslab
