#pragma once
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace cafnet {

// Iterative radix-2 FFT for power-of-two sizes. Twiddles are tabulated at
// construction so repeated transforms of the same size are cheap.
class Fft {
 public:
  explicit Fft(std::size_t n) : n_(n) {
    if (n == 0 || (n & (n - 1)) != 0) {
      throw std::invalid_argument("Fft: size must be a power of two");
    }
    twiddle_.resize(n / 2);
    const double step = -6.283185307179586476925286766559 / static_cast<double>(n);
    for (std::size_t k = 0; k < n / 2; ++k) {
      twiddle_[k] = std::polar(1.0, step * static_cast<double>(k));
    }
    rev_.resize(n);
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < n) ++bits;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t r = 0;
      for (std::size_t b = 0; b < bits; ++b) r |= ((i >> b) & 1u) << (bits - 1 - b);
      rev_[i] = r;
    }
  }

  std::size_t size() const { return n_; }

  void forward(std::complex<double>* a) const { transform(a, false); }
  void inverse(std::complex<double>* a) const {
    transform(a, true);
    const double inv = 1.0 / static_cast<double>(n_);
    for (std::size_t i = 0; i < n_; ++i) a[i] *= inv;
  }

  void forward(std::vector<std::complex<double>>& a) const {
    check(a.size());
    forward(a.data());
  }
  void inverse(std::vector<std::complex<double>>& a) const {
    check(a.size());
    inverse(a.data());
  }

 private:
  void check(std::size_t sz) const {
    if (sz != n_) throw std::invalid_argument("Fft: buffer size mismatch");
  }

  void transform(std::complex<double>* a, bool inv) const {
    for (std::size_t i = 0; i < n_; ++i) {
      if (rev_[i] > i) std::swap(a[i], a[rev_[i]]);
    }
    for (std::size_t len = 2; len <= n_; len <<= 1) {
      const std::size_t stride = n_ / len;
      for (std::size_t blk = 0; blk < n_; blk += len) {
        for (std::size_t k = 0; k < len / 2; ++k) {
          std::complex<double> w = twiddle_[k * stride];
          if (inv) w = std::conj(w);
          const std::complex<double> u = a[blk + k];
          const std::complex<double> v = a[blk + k + len / 2] * w;
          a[blk + k] = u + v;
          a[blk + k + len / 2] = u - v;
        }
      }
    }
  }

  std::size_t n_;
  std::vector<std::complex<double>> twiddle_;
  std::vector<std::size_t> rev_;
};

}  // namespace cafnet
