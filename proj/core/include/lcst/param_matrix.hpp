#pragma once

#include <cmath>

#include "lcst/errors.hpp"

namespace lcst {

/// SL(2,R) parameter quadruple (a,b;c,d) of a linear canonical transform.
/// Unimodular within 1e-9 at construction; all derived matrices stay
/// unimodular to closed-form accuracy.
struct ParamMatrix {
  double a = 1.0;
  double b = 0.0;
  double c = 0.0;
  double d = 1.0;

  double det() const { return a * d - b * c; }

  /// The kernel-based transform path needs b != 0; b == 0 is a separate
  /// (unimplemented) branch, flagged here.
  bool kernel_path() const { return b != 0.0; }

  friend bool operator==(const ParamMatrix&, const ParamMatrix&) = default;
};

/// Validated constructor. Throws DeterminantError if |ad - bc - 1| > 1e-9.
ParamMatrix sl2r_new(double a, double b, double c, double d);

/// Matrix product m * n (transform composition L^m L^n = L^{mn}).
ParamMatrix sl2r_compose(const ParamMatrix& m, const ParamMatrix& n);

/// Closed-form inverse (d,-b;-c,a).
ParamMatrix sl2r_inverse(const ParamMatrix& m);

/// Rotation matrix (cos a, sin a; -sin a, cos a) of the fractional case.
/// Throws DegenerateAngle when |sin alpha| < 1e-12 (b would vanish).
ParamMatrix frft_matrix(double alpha);

}  // namespace lcst
