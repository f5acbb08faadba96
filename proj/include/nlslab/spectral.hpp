#ifndef NLSLAB_SPECTRAL_HPP
#define NLSLAB_SPECTRAL_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "nlslab/common.hpp"

namespace nlslab {

/// In-place 1D complex DFT backed by FFTW.
///   forward:  X_k = sum_n x_n exp(-2 pi i k n / N)
///   backward: x_n = sum_k X_k exp(+2 pi i k n / N)   (no 1/N factor)
/// Plans are built once per object; not safe to share across threads.
class Fft1d {
 public:
  explicit Fft1d(std::size_t n);
  ~Fft1d();
  Fft1d(const Fft1d&) = delete;
  Fft1d& operator=(const Fft1d&) = delete;
  Fft1d(Fft1d&& other) noexcept;
  Fft1d& operator=(Fft1d&& other) noexcept;

  std::size_t size() const { return n_; }
  void forward(std::span<cplx> data) const;
  void backward(std::span<cplx> data) const;

 private:
  void execute(void* plan, std::span<cplx> data) const;
  void release();

  std::size_t n_ = 0;
  cplx* buffer_ = nullptr;
  void* forward_plan_ = nullptr;
  void* backward_plan_ = nullptr;
};

/// Signed frequency of DFT bin k for length n (0, 1, ..., -1).
inline long fft_frequency(std::size_t k, std::size_t n) {
  return k <= n / 2 ? static_cast<long>(k) : static_cast<long>(k) - static_cast<long>(n);
}

/// DFT bin holding signed frequency j (|j| < n/2).
inline std::size_t fft_bin(long j, std::size_t n) {
  return j >= 0 ? static_cast<std::size_t>(j) : static_cast<std::size_t>(static_cast<long>(n) + j);
}

/// Smallest length of the form 2^a 3^b 5^c that is >= n.
std::size_t good_fft_size(std::size_t n);

}  // namespace nlslab

#endif  // NLSLAB_SPECTRAL_HPP
