#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace lcst::fft {

bool is_power_of_two(std::size_t n);
std::size_t next_power_of_two(std::size_t n);

/// In-place radix-2 FFT; n must be a power of two. No normalization.
void forward(std::vector<std::complex<double>>& x);
/// Inverse with 1/n normalization.
void inverse(std::vector<std::complex<double>>& x);

/// Linear convolution of a and b (length |a|+|b|-1) via zero-padded FFT.
std::vector<std::complex<double>> convolve(
    const std::vector<std::complex<double>>& a,
    const std::vector<std::complex<double>>& b);

}  // namespace lcst::fft
