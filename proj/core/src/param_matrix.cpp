#include "lcst/param_matrix.hpp"

#include <cmath>
#include <string>

namespace lcst {

ParamMatrix sl2r_new(double a, double b, double c, double d) {
  if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c) &&
        std::isfinite(d))) {
    throw DeterminantError("parameter matrix entries must be finite");
  }
  const double det = a * d - b * c;
  if (std::abs(det - 1.0) > 1e-9) {
    throw DeterminantError("parameter matrix determinant is " +
                           std::to_string(det) + ", expected 1");
  }
  return ParamMatrix{a, b, c, d};
}

ParamMatrix sl2r_compose(const ParamMatrix& m, const ParamMatrix& n) {
  return ParamMatrix{m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                     m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

ParamMatrix sl2r_inverse(const ParamMatrix& m) {
  return ParamMatrix{m.d, -m.b, -m.c, m.a};
}

ParamMatrix frft_matrix(double alpha) {
  const double s = std::sin(alpha);
  if (std::abs(s) < 1e-12) {
    throw DegenerateAngle("rotation angle is a multiple of pi; b would be 0");
  }
  const double c = std::cos(alpha);
  return ParamMatrix{c, s, -s, c};
}

}  // namespace lcst
