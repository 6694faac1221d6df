#include "lcst/lct.hpp"

#include <cmath>
#include <iostream>
#include <numbers>

#include "lcst/fft.hpp"
#include "lcst/parallel.hpp"

namespace lcst {

namespace {

constexpr double kPi = std::numbers::pi;

void require_b(const ParamMatrix& m) {
  if (m.b == 0.0)
    throw ZeroB("transform parameter matrix has B = 0; kernel path undefined");
}

// Trapezoid weight: 1/2 at the first and last sample.
inline double trap(std::size_t k, std::size_t n) {
  return (k == 0 || k + 1 == n) ? 0.5 : 1.0;
}

void check_grid(const Signal& f, const ParamMatrix& m) {
  // Chirp aliasing guard: phase A t^2/(2B) must advance < pi per sample.
  const double r = std::abs(m.a / m.b);
  if (r == 0.0) return;
  const double edge =
      std::max(std::abs(f.t0()), std::abs(f.grid().back())) + 0.5 * f.dt();
  if (r * edge * f.dt() > kPi)
    throw GridTooCoarse("chirp phase advances more than pi per sample");
}

void check_decay(const Signal& f) {
  double peak = 0;
  for (const auto& v : f.samples()) peak = std::max(peak, std::abs(v));
  if (peak == 0) return;
  const double ends =
      std::max(std::abs(f[0]), std::abs(f[f.size() - 1])) / peak;
  if (ends > 1e-8)
    std::cerr << "warning: signal has not decayed at the grid edges "
                 "(relative end value "
              << ends << "); transform accuracy degrades\n";
}

}  // namespace

cplx lct_normalization(const ParamMatrix& m) {
  require_b(m);
  return 1.0 / std::sqrt(cplx(0.0, 2.0 * kPi * m.b));
}

cplx lct_kernel(const ParamMatrix& m, double t, double xi) {
  require_b(m);
  const double ph =
      0.5 * (m.a * t * t - 2.0 * xi * t + m.d * xi * xi) / m.b;
  return lct_normalization(m) * std::polar(1.0, ph);
}

cplx lct_point(const Signal& f, const ParamMatrix& m, double xi) {
  require_b(m);
  const std::size_t n = f.size();
  const double B = m.b;
  cplx acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double t = f.t(k);
    const double ph = 0.5 * (m.a * t * t - 2.0 * xi * t) / B;
    acc += trap(k, n) * f[k] * std::polar(1.0, ph);
  }
  const double ph_xi = 0.5 * m.d * xi * xi / B;
  return f.dt() * lct_normalization(m) * std::polar(1.0, ph_xi) * acc;
}

Signal lct_forward(const Signal& f, const ParamMatrix& m,
                   std::optional<GridSpec> xi_grid) {
  require_b(m);
  check_grid(f, m);
  check_decay(f);
  const GridSpec g = xi_grid ? *xi_grid : f.grid();
  const std::size_t n = f.size();
  const double B = m.b;
  const cplx norm = f.dt() * lct_normalization(m);

  // Precompute the xi-independent chirp on the input samples.
  std::vector<cplx> u(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = f.t(k);
    u[k] = trap(k, n) * f[k] * std::polar(1.0, 0.5 * m.a * t * t / B);
  }

  std::vector<cplx> out(g.n);
  parallel_for(g.n, [&](std::size_t j) {
    const double xi = g.at(j);
    cplx acc = 0.0;
    for (std::size_t k = 0; k < n; ++k)
      acc += u[k] * std::polar(1.0, -xi * f.t(k) / B);
    out[j] = norm * std::polar(1.0, 0.5 * m.d * xi * xi / B) * acc;
  });
  return Signal(g.x0, g.dx, std::move(out));
}

Signal lct_forward_fast(const Signal& f, const ParamMatrix& m) {
  require_b(m);
  const std::size_t n = f.size();
  if (!fft::is_power_of_two(n))
    throw NonPowerOfTwo("fast transform needs a power-of-two length, got " +
                        std::to_string(n));
  check_grid(f, m);
  check_decay(f);

  const double B = m.b, dt = f.dt(), t0 = f.t0();
  const double q = 0.5 * dt * dt / B;  // quadratic chirp rate per index
  const double lin = t0 * dt / B;

  // Bluestein split of the cross term exp(-i t0^2/B) exp(-i t0 dt (j+k)/B)
  // exp(-i j k dt^2 / B) with jk = (j^2 + k^2 - (j-k)^2)/2.
  std::vector<cplx> u(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = f.t(k);
    const double kk = static_cast<double>(k);
    const double ph = 0.5 * m.a * t * t / B - lin * kk - q * kk * kk;
    u[k] = trap(k, n) * f[k] * std::polar(1.0, ph);
  }
  std::vector<cplx> h(2 * n - 1);
  for (std::size_t p = 0; p < h.size(); ++p) {
    const double mm = static_cast<double>(p) - static_cast<double>(n - 1);
    h[p] = std::polar(1.0, q * mm * mm);
  }
  const auto cv = fft::convolve(u, h);

  const cplx norm = dt * lct_normalization(m);
  const cplx c0 = std::polar(1.0, -t0 * t0 / B);
  std::vector<cplx> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double xi = f.t(j);
    const double jj = static_cast<double>(j);
    const double ph = 0.5 * m.d * xi * xi / B - lin * jj - q * jj * jj;
    out[j] = norm * c0 * std::polar(1.0, ph) * cv[j + n - 1];
  }
  return Signal(t0, dt, std::move(out));
}

Signal lct_inverse(const Signal& F, const ParamMatrix& m) {
  require_b(m);
  const ParamMatrix inv = sl2r_inverse(m);
  require_b(inv);
  if (fft::is_power_of_two(F.size())) return lct_forward_fast(F, inv);
  return lct_forward(F, inv);
}

}  // namespace lcst
