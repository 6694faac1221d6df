#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "lcst/errors.hpp"

namespace lcst {

using cplx = std::complex<double>;

/// Uniform sample grid descriptor: points x0 + k*dx, k = 0..n-1.
struct GridSpec {
  double x0 = 0.0;
  double dx = 1.0;
  std::size_t n = 0;

  double at(std::size_t k) const { return x0 + static_cast<double>(k) * dx; }
  double back() const { return at(n - 1); }
};

/// Uniformly sampled complex-valued function of time.
class Signal {
 public:
  Signal() = default;
  Signal(double t0, double dt, std::vector<cplx> samples);

  double t0() const { return t0_; }
  double dt() const { return dt_; }
  std::size_t size() const { return samples_.size(); }
  double t(std::size_t k) const { return t0_ + static_cast<double>(k) * dt_; }
  GridSpec grid() const { return {t0_, dt_, samples_.size()}; }

  const std::vector<cplx>& samples() const { return samples_; }
  std::vector<cplx>& samples() { return samples_; }
  cplx operator[](std::size_t k) const { return samples_[k]; }
  cplx& operator[](std::size_t k) { return samples_[k]; }

  /// Discrete L2 norm sqrt(dt * sum |f_k|^2).
  double norm() const;

  /// dt-weighted inner product <f,g> = dt * sum f_k conj(g_k).
  /// Grids must match exactly.
  static cplx inner(const Signal& f, const Signal& g);

 private:
  double t0_ = 0.0;
  double dt_ = 1.0;
  std::vector<cplx> samples_;
};

}  // namespace lcst
