#include "lcst/fft.hpp"

#include <cmath>
#include <numbers>

#include "lcst/errors.hpp"

namespace lcst::fft {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_power_of_two(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

namespace {

void transform(std::vector<std::complex<double>>& x, bool inv) {
  const std::size_t n = x.size();
  if (n == 1) return;
  if (!is_power_of_two(n))
    throw NonPowerOfTwo("fft length " + std::to_string(n) +
                        " is not a power of two");

  // bit reversal
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(x[i], x[j]);
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang =
        (inv ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const auto u = x[i + k];
        const auto v = x[i + k + len / 2] * w;
        x[i + k] = u + v;
        x[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

}  // namespace

void forward(std::vector<std::complex<double>>& x) { transform(x, false); }

void inverse(std::vector<std::complex<double>>& x) {
  transform(x, true);
  const double s = 1.0 / static_cast<double>(x.size());
  for (auto& v : x) v *= s;
}

std::vector<std::complex<double>> convolve(
    const std::vector<std::complex<double>>& a,
    const std::vector<std::complex<double>>& b) {
  const std::size_t m = a.size() + b.size() - 1;
  const std::size_t n = next_power_of_two(m);
  std::vector<std::complex<double>> fa(n), fb(n);
  std::copy(a.begin(), a.end(), fa.begin());
  std::copy(b.begin(), b.end(), fb.begin());
  forward(fa);
  forward(fb);
  for (std::size_t i = 0; i < n; ++i) fa[i] *= fb[i];
  inverse(fa);
  fa.resize(m);
  return fa;
}

}  // namespace lcst::fft
