#pragma once

#include <utility>
#include <vector>

#include "lcst/param_matrix.hpp"
#include "lcst/signal.hpp"
#include "lcst/window.hpp"

namespace lcst {

/// Finitely supported filter: coefficient for index k is coeffs[k - offset].
struct FilterSequence {
  long offset = 0;
  std::vector<cplx> coeffs;

  cplx at(long k) const {
    const long i = k - offset;
    if (i < 0 || static_cast<std::size_t>(i) >= coeffs.size()) return 0.0;
    return coeffs[static_cast<std::size_t>(i)];
  }
  long first() const { return offset; }
  long last() const { return offset + static_cast<long>(coeffs.size()) - 1; }
};

/// Scaling function phi with the matrices that modulate its translates.
struct ScalingFunction {
  WindowSpec base;
  ParamMatrix m1;
  ParamMatrix m2;
};

/// Chirp-modulated dyadic translate:
/// 2^{m/2} phi(2^m t - n) exp(-(i/2){(t^2-(n/2^m)^2)A1/B1
///                                   - (2^m t-n)^2 A2/B2 - 2(2^m t+n)/B1}).
cplx phi_mn(const ScalingFunction& sf, int m, long n, double t);

/// <phi_{m,n}, phi_{mp,np}> by quadrature on a half-step-offset grid (so
/// piecewise-constant bases integrate exactly).
cplx phi_inner(const ScalingFunction& sf, int m, long n, int mp, long np);

/// Gram matrix of the level-m translates phi_{m,n}, n in [n_lo, n_hi].
std::vector<std::vector<cplx>> gram_matrix(const ScalingFunction& sf, int m,
                                           long n_lo, long n_hi);

/// Samples of the spectral function L^{M2}{e^{it/B1} phi} on the lattice
/// (B2/B1)(u + 2 pi k |B1|), u in u_grid, k in [k_min, k_max].
struct SpectralProfile {
  std::vector<double> u_grid;
  long k_min = 0;
  long k_max = 0;
  double b1 = 1.0;
  double b2 = 1.0;
  std::vector<std::vector<cplx>> values;  // [u index][k - k_min]

  /// sum_k |value|^2 at one u.
  double periodized_sum(std::size_t ui) const;
};

SpectralProfile spectral_profile(const ScalingFunction& sf,
                                 const std::vector<double>& u_grid, long k_min,
                                 long k_max);

/// (A_est, B_est): min and max over u of the periodized spectral energy sum.
/// Orthonormal translates give A = B = 1/(2 pi |B2|). Throws TruncationError
/// when the k-range edge terms exceed 1e-8 of the sum.
std::pair<double, double> riesz_bounds(const ScalingFunction& sf,
                                       const std::vector<double>& u_grid,
                                       long k_min = -32, long k_max = 32);
std::pair<double, double> riesz_bounds(const SpectralProfile& profile);

/// Divides the spectral samples by sqrt(2 pi |B2| * periodized sum), making
/// the sum identically 1/(2 pi |B2|). Throws NotRiesz when the lower bound
/// is not strictly positive.
SpectralProfile orthonormalize(const SpectralProfile& profile);
SpectralProfile orthonormalize(const ScalingFunction& sf,
                               const std::vector<double>& u_grid,
                               long k_min = -32, long k_max = 32);

/// Two-scale symbol
/// Lambda(u) = (sqrt2/2) sum_n c_n exp((i/2)(n^2 A1/(4B1) + 4n/B1 - 2nu/B2)).
cplx symbol_lambda(const FilterSequence& c, const ParamMatrix& m1,
                   const ParamMatrix& m2, double u);
/// Wavelet symbol Gamma: same trigonometric form with the wavelet filter.
cplx symbol_gamma(const FilterSequence& d, const ParamMatrix& m1,
                  const ParamMatrix& m2, double u);

/// max over u_grid of | |Lambda(v(u))|^2 + |Lambda(v(u + pi|B1|))|^2 - 1 |
/// with v(u) = B2 u / B1.
double qmf_check(const FilterSequence& c, const ParamMatrix& m1,
                 const ParamMatrix& m2, const std::vector<double>& u_grid);

/// d_k = (-1)^{1-k} conj(c_{1-k})
///       exp(-(i/2){(1-k)^2 A1/(4B1) + k^2 A1/(4B1) + 4/B1}).
FilterSequence derive_wavelet_coeffs(const FilterSequence& c,
                                     const ParamMatrix& m1,
                                     const ParamMatrix& m2);

/// max entry-wise deviation of U U* from the identity, where U rows are
/// (Lambda, Lambda_shift) and (Gamma, Gamma_shift).
double unitarity_check(const FilterSequence& c, const FilterSequence& d,
                       const ParamMatrix& m1, const ParamMatrix& m2,
                       const std::vector<double>& u_grid);

/// max over u_grid of |Lambda conj(Gamma) + Lambda_sh conj(Gamma_sh)|.
double cross_orthogonality_check(const FilterSequence& c,
                                 const FilterSequence& d,
                                 const ParamMatrix& m1, const ParamMatrix& m2,
                                 const std::vector<double>& u_grid);

struct RhoReport {
  std::vector<cplx> rho_samples;
  double antiperiodicity_deviation = 0.0;
  double even_coefficient_mass = 0.0;  // relative to total spectral mass
};

/// rho = Gamma / conj(Lambda_shift) sampled on u_grid (which must uniformly
/// cover one period [0, 2 pi |B1|)); checks rho(u + half period) = -rho(u)
/// and that even-indexed Fourier coefficients vanish.
RhoReport rho_decompose(const FilterSequence& c, const FilterSequence& d,
                        const ParamMatrix& m1, const ParamMatrix& m2,
                        const std::vector<double>& u_grid);

}  // namespace lcst
