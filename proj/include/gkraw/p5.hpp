#pragma once

#include <array>
#include <span>

#include "gkraw/dpsystem.hpp"

namespace gkraw {

/// Parameter quadruple of the Painlevé V equation; for this weight family
/// A >= 0, B <= 0 and D = -1/2 always.
struct P5Params {
  Scalar A;
  Scalar B;
  Scalar C;
  Scalar D;
};

/// One sample of the transcendent: y(c) and y'(c) at abscissa c.
struct P5Sample {
  Scalar c;
  Scalar y;
  Scalar y_prime;
};

/// A = (alpha-N-1)^2/2, B = -(n-N)^2/2, C = -(n+alpha), D = -1/2.
P5Params p5_params(long n, long N, const Scalar& alpha);

struct RecoveredY {
  Scalar y;             // selected root
  Scalar residual;      // |predicted y_{n-1} - supplied y_{n-1}| for the selected root
  Scalar y_other;       // the rejected root (equal to y for a double root)
  Scalar residual_other;
  bool ambiguous;       // both roots passed the cross-check; logged, never resolved silently
};

/// The y_{n+1} Bäcklund relation viewed as a quadratic in y; the root is
/// selected by the y_{n-1} relation cross-check. Runs at the given float
/// precision (the root needs a square root).
RecoveredY recover_y(const WeightParams& p, long n, const Scalar& y_n, const Scalar& y_np1,
                     const Scalar& y_nm1, mpfr_prec_t prec);

/// y' isolated from the y_n(c) transformation (it enters linearly).
Scalar recover_y_prime(const WeightParams& p, long n, const Scalar& y, const Scalar& y_n);

/// Forward transformation y_n(c) from (y, y'); singular at y in {0,1}.
Scalar forward_y_n(const WeightParams& p, long n, const P5Sample& s);

/// Forward transformation x_n(c) from (y, y'); singular at y in {0,1}.
Scalar forward_x_n(const WeightParams& p, long n, const P5Sample& s);

/// The printed Bäcklund shifts expressing y_{n+1} and y_{n-1} through (y, y_n).
Scalar backward_y_np1(const WeightParams& p, long n, const Scalar& y, const Scalar& y_n);
Scalar backward_y_nm1(const WeightParams& p, long n, const Scalar& y, const Scalar& y_n);

/// y_n'(c) in closed form from the system state (the Toda-coupled expression).
Scalar y_n_prime_from_system(const WeightParams& p, const XYState& s);

struct P5ResidualPair {
  Scalar from_y_prime;       // y'' estimated as central difference of the y' samples
  Scalar from_y_second_diff; // y'' estimated as the 3-point second difference of y
};

/// Painlevé V residual at the middle of three equispaced-in-c samples; both
/// second-derivative estimates are reported, each O(h^2) for true solutions.
P5ResidualPair p5_residual(const P5Params& par, const std::array<P5Sample, 3>& samples);

/// Residual of the second-order second-degree (Cosgrove) form after the
/// substitution v(z) = 4N y_n - (2 alpha - 4N + 2n - 3), c = z^2, evaluated at
/// the middle of a five-point z-grid z0 + j*hz, j = -2..2. O(hz^2).
Scalar cosgrove_residual(long n, long N, const Scalar& alpha, std::span<const Scalar> y_values,
                         const Scalar& z0, const Scalar& hz);

}  // namespace gkraw
