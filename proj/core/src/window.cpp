#include "lcst/window.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "lcst/errors.hpp"

namespace lcst {

WindowSpec WindowSpec::gaussian(double width) {
  if (!(width > 0) || !std::isfinite(width))
    throw BadParams("gaussian window width must be positive");
  WindowSpec w;
  w.kind_ = Kind::Gaussian;
  w.width_ = width;
  return w;
}

WindowSpec WindowSpec::hann(double support) {
  if (!(support > 0) || !std::isfinite(support))
    throw BadParams("hann window support must be positive");
  WindowSpec w;
  w.kind_ = Kind::Hann;
  w.width_ = support;
  return w;
}

WindowSpec WindowSpec::boxcar(double lo, double hi) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
    throw BadParams("boxcar window needs lo < hi");
  WindowSpec w;
  w.kind_ = Kind::Boxcar;
  w.lo_ = lo;
  w.hi_ = hi;
  return w;
}

WindowSpec WindowSpec::sampled(Signal s) {
  double peak = 0;
  for (const auto& v : s.samples()) peak = std::max(peak, std::abs(v));
  if (peak == 0) throw ZeroWindow("sampled window is identically zero");
  WindowSpec w;
  w.kind_ = Kind::Sampled;
  w.samples_ = std::make_shared<Signal>(std::move(s));
  return w;
}

const Signal& WindowSpec::samples() const {
  if (!samples_) throw BadParams("window has no sample data");
  return *samples_;
}

cplx WindowSpec::operator()(double t) const {
  switch (kind_) {
    case Kind::Gaussian: {
      const double x = t / width_;
      // unit-peak Gaussian e^{-t^2/(2w^2)}
      return std::exp(-0.5 * x * x);
    }
    case Kind::Hann: {
      if (std::abs(t) >= width_) return 0.0;
      const double c = std::cos(0.5 * std::numbers::pi * t / width_);
      return c * c;
    }
    case Kind::Boxcar:
      return (t >= lo_ && t < hi_) ? 1.0 : 0.0;
    case Kind::Sampled: {
      const Signal& s = *samples_;
      const double x = (t - s.t0()) / s.dt();
      if (x < 0 || x > static_cast<double>(s.size() - 1)) return 0.0;
      const auto k = static_cast<std::size_t>(x);
      if (k + 1 >= s.size()) return s[s.size() - 1];
      const double frac = x - static_cast<double>(k);
      return s[k] * (1.0 - frac) + s[k + 1] * frac;
    }
  }
  return 0.0;
}

double WindowSpec::suggested_extent() const {
  switch (kind_) {
    case Kind::Gaussian:
      return 8.0 * width_;  // e^{-32} ~ 1e-14 of peak
    case Kind::Hann:
      return width_;
    case Kind::Boxcar:
      return std::max(std::abs(lo_), std::abs(hi_));
    case Kind::Sampled: {
      const Signal& s = *samples_;
      return std::max(std::abs(s.t0()), std::abs(s.grid().back()));
    }
  }
  return 1.0;
}

std::string WindowSpec::descriptor() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Gaussian:
      os << "gaussian:" << width_;
      break;
    case Kind::Hann:
      os << "hann:" << width_;
      break;
    case Kind::Boxcar:
      os << "boxcar:" << lo_ << ":" << hi_;
      break;
    case Kind::Sampled:
      os << "sampled:" << samples_->size();
      break;
  }
  return os.str();
}

}  // namespace lcst
