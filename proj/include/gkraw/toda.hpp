#pragma once

#include "gkraw/dpsystem.hpp"

namespace gkraw {

struct TodaResidual {
  Scalar res_a;  // d(a_n^2)/dc estimate minus (a_n^2/c)(b_n - b_{n-1})
  Scalar res_b;  // d(b_n)/dc  estimate minus (a_{n+1}^2 - a_n^2)/c
};

/// Central-difference residuals of the Toda system in the deformation
/// parameter c, using exact coefficient tables at c-h, c, c+h. Both
/// components are O(h^2). Requires 1 <= n <= N, h > 0, c - h > 0.
TodaResidual toda_residual(const WeightParams& p, long n, const Scalar& h);

/// Same residuals with the five-point fourth-order stencil; O(h^4).
TodaResidual toda_residual_order4(const WeightParams& p, long n, const Scalar& h);

}  // namespace gkraw
