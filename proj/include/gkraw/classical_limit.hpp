#pragma once

#include "gkraw/dpsystem.hpp"

namespace gkraw {

/// Closed-form recurrence coefficients of the classical Krawtchouk weight:
/// a_n^2 = n p (1-p)(N+1-n) for 0 <= n <= N+1, b_n = p(N-n) + n(1-p) for n <= N.
Scalar krawtchouk_a_sq(long N, const Scalar& p, long n);
Scalar krawtchouk_b(long N, const Scalar& p, long n);
std::pair<Scalar, Scalar> krawtchouk_exact(long N, const Scalar& p, long n);

/// Embedding of the classical weight into the generalized family along the
/// degeneration ray: alpha = -s, c = s p/(1-p), so -c/alpha = p/(1-p) exactly.
WeightParams embed(long N, const Scalar& p, const Scalar& s);

/// Max over n of the relative gap between the embedded family's coefficients
/// and the classical closed forms; decays as s grows (empirically ~1/s).
Scalar limit_deviation(long N, const Scalar& p, const Scalar& s);

}  // namespace gkraw
