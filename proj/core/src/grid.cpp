#include "lcst/grid.hpp"

#include <cmath>

namespace lcst {

ScaleShiftGrid::ScaleShiftGrid(std::vector<double> scales,
                               std::vector<double> shifts)
    : scales_(std::move(scales)), shifts_(std::move(shifts)) {
  if (scales_.size() < 2 || shifts_.size() < 2) {
    throw ValidationError("scale-shift grid needs at least 2 scales and 2 shifts");
  }
  for (double a : scales_) {
    if (!(a > 0.0)) throw NonPositiveScale("scales must be strictly positive");
  }
  const double ratio = scales_[1] / scales_[0];
  for (std::size_t i = 0; i + 1 < scales_.size(); ++i) {
    if (!(scales_[i + 1] > scales_[i])) {
      throw ValidationError("scales must be strictly increasing");
    }
    if (std::abs(scales_[i + 1] / scales_[i] - ratio) > 1e-12 * ratio) {
      throw ValidationError("scales must be geometrically spaced");
    }
  }
  const double db = shifts_[1] - shifts_[0];
  if (!(db > 0.0)) throw ValidationError("shifts must be strictly increasing");
  for (std::size_t j = 0; j + 1 < shifts_.size(); ++j) {
    if (std::abs((shifts_[j + 1] - shifts_[j]) - db) > 1e-9 * std::abs(db)) {
      throw ValidationError("shifts must be uniformly spaced");
    }
  }
}

ScaleShiftGrid ScaleShiftGrid::make(double a_min, double a_max,
                                    std::size_t n_scales, double b_min,
                                    double b_max, std::size_t n_shifts) {
  if (!(a_min > 0.0) || !(a_max > a_min) || n_scales < 2 || n_shifts < 2 ||
      !(b_max > b_min)) {
    throw BadParams("invalid scale-shift grid parameters");
  }
  std::vector<double> scales(n_scales);
  const double step = std::log(a_max / a_min) / static_cast<double>(n_scales - 1);
  for (std::size_t i = 0; i < n_scales; ++i) {
    scales[i] = a_min * std::exp(step * static_cast<double>(i));
  }
  scales.back() = a_max;
  std::vector<double> shifts(n_shifts);
  const double db = (b_max - b_min) / static_cast<double>(n_shifts - 1);
  for (std::size_t j = 0; j < n_shifts; ++j) {
    shifts[j] = b_min + db * static_cast<double>(j);
  }
  return ScaleShiftGrid(std::move(scales), std::move(shifts));
}

double ScaleShiftGrid::dlog_a() const {
  return std::log(scales_[1] / scales_[0]);
}

double ScaleShiftGrid::db() const { return shifts_[1] - shifts_[0]; }

CoefficientPlane::CoefficientPlane(ScaleShiftGrid grid, std::vector<cplx> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_.n_scales() * grid_.n_shifts()) {
    throw ValidationError("plane values do not match grid dimensions");
  }
}

CoefficientPlane CoefficientPlane::zeros(ScaleShiftGrid grid) {
  std::vector<cplx> v(grid.n_scales() * grid.n_shifts(), cplx(0.0, 0.0));
  return CoefficientPlane(std::move(grid), std::move(v));
}

double CoefficientPlane::energy() const {
  const double dla = grid_.dlog_a();
  const double db = grid_.db();
  double total = 0.0;
  for (std::size_t i = 0; i < grid_.n_scales(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < grid_.n_shifts(); ++j) {
      row += std::norm((*this)(i, j));
    }
    const double w = (i == 0 || i + 1 == grid_.n_scales()) ? 0.5 : 1.0;
    total += w * row;
  }
  return total * dla * db;
}

cplx CoefficientPlane::inner(const CoefficientPlane& f,
                             const CoefficientPlane& g) {
  if (f.grid().n_scales() != g.grid().n_scales() ||
      f.grid().n_shifts() != g.grid().n_shifts()) {
    throw ValidationError("plane inner product requires matching grids");
  }
  const double dla = f.grid_.dlog_a();
  const double db = f.grid_.db();
  cplx total = 0.0;
  for (std::size_t i = 0; i < f.grid_.n_scales(); ++i) {
    cplx row = 0.0;
    for (std::size_t j = 0; j < f.grid_.n_shifts(); ++j) {
      row += f(i, j) * std::conj(g(i, j));
    }
    const double w = (i == 0 || i + 1 == f.grid_.n_scales()) ? 0.5 : 1.0;
    total += w * row;
  }
  return total * dla * db;
}

double CoefficientPlane::rms() const {
  double s = 0.0;
  for (const cplx& v : values_) s += std::norm(v);
  return std::sqrt(s / static_cast<double>(values_.size()));
}

}  // namespace lcst
