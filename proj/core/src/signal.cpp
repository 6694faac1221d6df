#include "lcst/signal.hpp"

#include <cmath>

namespace lcst {

Signal::Signal(double t0, double dt, std::vector<cplx> samples)
    : t0_(t0), dt_(dt), samples_(std::move(samples)) {
  if (samples_.size() < 2) throw ValidationError("signal needs at least 2 samples");
  if (!(dt_ > 0.0) || !std::isfinite(dt_) || !std::isfinite(t0_)) {
    throw ValidationError("signal grid must have finite t0 and dt > 0");
  }
  for (const cplx& v : samples_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw ValidationError("signal samples must be finite");
    }
  }
}

double Signal::norm() const {
  double s = 0.0;
  for (const cplx& v : samples_) s += std::norm(v);
  return std::sqrt(dt_ * s);
}

cplx Signal::inner(const Signal& f, const Signal& g) {
  if (f.size() != g.size() || f.t0() != g.t0() || f.dt() != g.dt()) {
    throw ValidationError("inner product requires identical grids");
  }
  cplx s = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) s += f[k] * std::conj(g[k]);
  return f.dt() * s;
}

}  // namespace lcst
