#include "lcst/mra.hpp"

#include <cmath>
#include <numbers>

#include "lcst/errors.hpp"
#include "lcst/fft.hpp"
#include "lcst/lct.hpp"
#include "lcst/parallel.hpp"

namespace lcst {

namespace {

constexpr double kPi = std::numbers::pi;

void require_b(const ParamMatrix& m1, const ParamMatrix& m2) {
  if (m1.b == 0.0 || m2.b == 0.0)
    throw ZeroB("both parameter matrices need a nonzero B entry");
}

inline double trap(std::size_t k, std::size_t n) {
  return (k == 0 || k + 1 == n) ? 0.5 : 1.0;
}

// Half-period shift in the base variable, applied before the v = B2 u / B1
// substitution.
inline double vmap(const ParamMatrix& m1, const ParamMatrix& m2, double u) {
  return m2.b * u / m1.b;
}
inline double vshift(const ParamMatrix& m1, const ParamMatrix& m2, double u) {
  return m2.b * (u + kPi * std::abs(m1.b)) / m1.b;
}

}  // namespace

cplx phi_mn(const ScalingFunction& sf, int m, long n, double t) {
  require_b(sf.m1, sf.m2);
  const double two_m = std::ldexp(1.0, m);
  const double x = two_m * t - static_cast<double>(n);
  const double nn = static_cast<double>(n) / two_m;
  const double ph =
      -0.5 * ((t * t - nn * nn) * sf.m1.a / sf.m1.b - x * x * sf.m2.a / sf.m2.b -
              2.0 * (two_m * t + static_cast<double>(n)) / sf.m1.b);
  return std::sqrt(two_m) * sf.base(x) * std::polar(1.0, ph);
}

cplx phi_inner(const ScalingFunction& sf, int m, long n, int mp, long np) {
  // Common quadrature interval covering both supports.
  const double ext = sf.base.suggested_extent();
  const double lo = std::min((static_cast<double>(n) - ext) / std::ldexp(1.0, m),
                             (static_cast<double>(np) - ext) / std::ldexp(1.0, mp));
  const double hi = std::max((static_cast<double>(n) + ext) / std::ldexp(1.0, m),
                             (static_cast<double>(np) + ext) / std::ldexp(1.0, mp));
  // Half-step-offset samples keep lattice-aligned discontinuities off the
  // nodes, so indicator bases integrate exactly.
  const std::size_t nq = 1 << 14;
  const double dt = (hi - lo) / static_cast<double>(nq);
  cplx acc = 0.0;
  for (std::size_t k = 0; k < nq; ++k) {
    const double t = lo + (static_cast<double>(k) + 0.5) * dt;
    acc += phi_mn(sf, m, n, t) * std::conj(phi_mn(sf, mp, np, t));
  }
  return dt * acc;
}

std::vector<std::vector<cplx>> gram_matrix(const ScalingFunction& sf, int m,
                                           long n_lo, long n_hi) {
  if (n_hi < n_lo) throw BadParams("empty translate range");
  // Decay precondition: the base must have faded at its own grid edges.
  const double ext = sf.base.suggested_extent();
  double peak = 0.0;
  for (int k = -64; k <= 64; ++k)
    peak = std::max(peak, std::abs(sf.base(ext * k / 64.0)));
  const double edge =
      std::max(std::abs(sf.base(-ext * (1 + 1e-9))), std::abs(sf.base(ext * (1 + 1e-9))));
  if (peak > 0 && edge > 1e-8 * peak)
    throw DecayViolation("scaling function has not decayed at the quadrature edge");

  const auto sz = static_cast<std::size_t>(n_hi - n_lo + 1);
  std::vector<std::vector<cplx>> g(sz, std::vector<cplx>(sz));
  parallel_for(sz, [&](std::size_t i) {
    for (std::size_t j = i; j < sz; ++j) {
      const cplx v = phi_inner(sf, m, n_lo + static_cast<long>(i), m,
                               n_lo + static_cast<long>(j));
      g[i][j] = v;
      if (j != i) g[j][i] = std::conj(v);
    }
  });
  return g;
}

double SpectralProfile::periodized_sum(std::size_t ui) const {
  double s = 0.0;
  for (const auto& v : values[ui]) s += std::norm(v);
  return s;
}

SpectralProfile spectral_profile(const ScalingFunction& sf,
                                 const std::vector<double>& u_grid, long k_min,
                                 long k_max) {
  require_b(sf.m1, sf.m2);
  if (k_max <= k_min) throw BadParams("empty lattice index range");

  const double ext = sf.base.suggested_extent() + 1.0;
  // Resolve the fastest oscillation of the point quadrature: the kernel
  // frequency at the largest lattice argument plus the base modulation.
  double xi_max = 0.0;
  for (long k : {k_min, k_max}) {
    const double u_edge = (k > 0) ? u_grid.back() : u_grid.front();
    xi_max = std::max(xi_max,
                      std::abs(sf.m2.b * (u_edge + 2.0 * kPi * static_cast<double>(k) *
                                                       std::abs(sf.m1.b)) /
                               sf.m1.b));
  }
  const double omega = xi_max / std::abs(sf.m2.b) +
                       std::abs(sf.m2.a / sf.m2.b) * ext +
                       1.0 / std::abs(sf.m1.b) + 1.0;
  const double dt = std::min(2.0 * kPi / (16.0 * omega), ext / 512.0);
  const auto nq = static_cast<std::size_t>(std::ceil(2.0 * ext / dt)) + 1;

  std::vector<cplx> g(nq);
  for (std::size_t k = 0; k < nq; ++k) {
    const double t = -ext + (static_cast<double>(k) + 0.5) * dt;
    g[k] = sf.base(t) * std::polar(1.0, t / sf.m1.b);
  }
  const Signal gs(-ext + 0.5 * dt, dt, std::move(g));

  SpectralProfile p;
  p.u_grid = u_grid;
  p.k_min = k_min;
  p.k_max = k_max;
  p.b1 = sf.m1.b;
  p.b2 = sf.m2.b;
  p.values.assign(u_grid.size(),
                  std::vector<cplx>(static_cast<std::size_t>(k_max - k_min + 1)));
  parallel_for(u_grid.size(), [&](std::size_t ui) {
    for (long k = k_min; k <= k_max; ++k) {
      const double xi =
          sf.m2.b *
          (u_grid[ui] + 2.0 * kPi * static_cast<double>(k) * std::abs(sf.m1.b)) /
          sf.m1.b;
      p.values[ui][static_cast<std::size_t>(k - k_min)] =
          lct_point(gs, sf.m2, xi);
    }
  });
  return p;
}

namespace {

void check_truncation(const SpectralProfile& p) {
  for (std::size_t ui = 0; ui < p.u_grid.size(); ++ui) {
    const double s = p.periodized_sum(ui);
    if (s <= 0.0) continue;
    const double edge = std::max(std::norm(p.values[ui].front()),
                                 std::norm(p.values[ui].back()));
    if (edge > 1e-8 * s)
      throw TruncationError(
          "lattice edge terms exceed 1e-8 of the periodized sum; widen the "
          "index range");
  }
}

}  // namespace

std::pair<double, double> riesz_bounds(const SpectralProfile& profile) {
  check_truncation(profile);
  double lo = 0.0, hi = 0.0;
  for (std::size_t ui = 0; ui < profile.u_grid.size(); ++ui) {
    const double s = profile.periodized_sum(ui);
    if (ui == 0) {
      lo = hi = s;
    } else {
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
  }
  return {lo, hi};
}

std::pair<double, double> riesz_bounds(const ScalingFunction& sf,
                                       const std::vector<double>& u_grid,
                                       long k_min, long k_max) {
  return riesz_bounds(spectral_profile(sf, u_grid, k_min, k_max));
}

SpectralProfile orthonormalize(const SpectralProfile& profile) {
  const auto [lo, hi] = riesz_bounds(profile);
  if (lo <= 1e-12)
    throw NotRiesz("lower frame bound is not strictly positive");
  SpectralProfile out = profile;
  const double c = 2.0 * kPi * std::abs(profile.b2);
  for (std::size_t ui = 0; ui < out.u_grid.size(); ++ui) {
    const double s = 1.0 / std::sqrt(c * out.periodized_sum(ui));
    for (auto& v : out.values[ui]) v *= s;
  }
  return out;
}

SpectralProfile orthonormalize(const ScalingFunction& sf,
                               const std::vector<double>& u_grid, long k_min,
                               long k_max) {
  return orthonormalize(spectral_profile(sf, u_grid, k_min, k_max));
}

namespace {

cplx symbol(const FilterSequence& f, const ParamMatrix& m1,
            const ParamMatrix& m2, double u) {
  require_b(m1, m2);
  cplx acc = 0.0;
  for (long n = f.first(); n <= f.last(); ++n) {
    const double nn = static_cast<double>(n);
    const double ph =
        0.5 * (nn * nn * m1.a / (4.0 * m1.b) + 4.0 * nn / m1.b -
               2.0 * nn * u / m2.b);
    acc += f.at(n) * std::polar(1.0, ph);
  }
  return 0.5 * std::numbers::sqrt2 * acc;
}

}  // namespace

cplx symbol_lambda(const FilterSequence& c, const ParamMatrix& m1,
                   const ParamMatrix& m2, double u) {
  return symbol(c, m1, m2, u);
}

cplx symbol_gamma(const FilterSequence& d, const ParamMatrix& m1,
                  const ParamMatrix& m2, double u) {
  return symbol(d, m1, m2, u);
}

double qmf_check(const FilterSequence& c, const ParamMatrix& m1,
                 const ParamMatrix& m2, const std::vector<double>& u_grid) {
  double dev = 0.0;
  for (double u : u_grid) {
    const double s = std::norm(symbol_lambda(c, m1, m2, vmap(m1, m2, u))) +
                     std::norm(symbol_lambda(c, m1, m2, vshift(m1, m2, u)));
    dev = std::max(dev, std::abs(s - 1.0));
  }
  return dev;
}

FilterSequence derive_wavelet_coeffs(const FilterSequence& c,
                                     const ParamMatrix& m1,
                                     const ParamMatrix& m2) {
  require_b(m1, m2);
  FilterSequence d;
  d.offset = 1 - c.last();
  d.coeffs.resize(c.coeffs.size());
  for (long k = d.offset; k <= 1 - c.first(); ++k) {
    const double kk = static_cast<double>(k);
    const double rk = 1.0 - kk;
    const double ph = -0.5 * (rk * rk * m1.a / (4.0 * m1.b) +
                              kk * kk * m1.a / (4.0 * m1.b) + 4.0 / m1.b);
    const double sign = (((1 - k) % 2 + 2) % 2 == 0) ? 1.0 : -1.0;
    d.coeffs[static_cast<std::size_t>(k - d.offset)] =
        sign * std::conj(c.at(1 - k)) * std::polar(1.0, ph);
  }
  return d;
}

double unitarity_check(const FilterSequence& c, const FilterSequence& d,
                       const ParamMatrix& m1, const ParamMatrix& m2,
                       const std::vector<double>& u_grid) {
  double dev = 0.0;
  for (double u : u_grid) {
    const cplx l = symbol_lambda(c, m1, m2, vmap(m1, m2, u));
    const cplx ls = symbol_lambda(c, m1, m2, vshift(m1, m2, u));
    const cplx g = symbol_gamma(d, m1, m2, vmap(m1, m2, u));
    const cplx gs = symbol_gamma(d, m1, m2, vshift(m1, m2, u));
    // U U* entries against the identity.
    dev = std::max(dev, std::abs(std::norm(l) + std::norm(ls) - 1.0));
    dev = std::max(dev, std::abs(std::norm(g) + std::norm(gs) - 1.0));
    dev = std::max(dev, std::abs(l * std::conj(g) + ls * std::conj(gs)));
  }
  return dev;
}

double cross_orthogonality_check(const FilterSequence& c,
                                 const FilterSequence& d,
                                 const ParamMatrix& m1, const ParamMatrix& m2,
                                 const std::vector<double>& u_grid) {
  double dev = 0.0;
  for (double u : u_grid) {
    const cplx l = symbol_lambda(c, m1, m2, vmap(m1, m2, u));
    const cplx ls = symbol_lambda(c, m1, m2, vshift(m1, m2, u));
    const cplx g = symbol_gamma(d, m1, m2, vmap(m1, m2, u));
    const cplx gs = symbol_gamma(d, m1, m2, vshift(m1, m2, u));
    dev = std::max(dev, std::abs(l * std::conj(g) + ls * std::conj(gs)));
  }
  return dev;
}

RhoReport rho_decompose(const FilterSequence& c, const FilterSequence& d,
                        const ParamMatrix& m1, const ParamMatrix& m2,
                        const std::vector<double>& u_grid) {
  require_b(m1, m2);
  const std::size_t n = u_grid.size();
  RhoReport rep;
  rep.rho_samples.resize(n);
  std::size_t bad = 0;
  auto rho_at = [&](double u) -> cplx {
    const cplx ls = symbol_lambda(c, m1, m2, vshift(m1, m2, u));
    if (std::abs(ls) < 1e-8) return cplx(0.0, 0.0);
    return symbol_gamma(d, m1, m2, vmap(m1, m2, u)) / std::conj(ls);
  };
  for (std::size_t i = 0; i < n; ++i) {
    const double u = u_grid[i];
    const cplx ls = symbol_lambda(c, m1, m2, vshift(m1, m2, u));
    if (std::abs(ls) < 1e-8) ++bad;
    rep.rho_samples[i] = rho_at(u);
    rep.antiperiodicity_deviation =
        std::max(rep.antiperiodicity_deviation,
                 std::abs(rho_at(u + kPi * std::abs(m1.b)) + rep.rho_samples[i]));
  }
  if (bad * 10 > n)
    throw IllConditioned(
        "half-period symbol nearly vanishes on more than 10% of the grid");

  // Fourier mass of even harmonics: the grid must uniformly cover one
  // period, so a plain DFT exposes the harmonic content of rho.
  std::vector<cplx> spec(rep.rho_samples);
  if (fft::is_power_of_two(spec.size())) {
    fft::forward(spec);
  } else {
    // direct DFT for non-power-of-two grids
    std::vector<cplx> out(n, 0.0);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        out[j] += spec[k] * std::polar(1.0, -2.0 * kPi *
                                                static_cast<double>(j * k) /
                                                static_cast<double>(n));
    spec = std::move(out);
  }
  double even = 0.0, total = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double mass = std::norm(spec[j]);
    total += mass;
    if (j % 2 == 0) even += mass;
  }
  rep.even_coefficient_mass = total > 0 ? even / total : 0.0;
  return rep;
}

}  // namespace lcst
