#pragma once

#include <vector>

#include "gkraw/scalar.hpp"

namespace gkraw {

/// Parameters of the semi-classical Krawtchouk weight
///   w(k) = C(N,k) c^k / (1-alpha)_k  on the lattice {0,...,N},
/// requiring alpha < 1 and c > 0 so the weight is positive.
struct WeightParams {
  long N;
  Scalar alpha;
  Scalar c;

  WeightParams(long N_, Scalar alpha_, Scalar c_);

  bool exact() const { return alpha.is_exact(); }
  Scalar make(long n) const { return alpha.make(n); }
  Scalar zero() const { return make(0); }
  Scalar one() const { return make(1); }

  WeightParams with_c(Scalar new_c) const { return WeightParams(N, alpha, std::move(new_c)); }
  WeightParams to_float(mpfr_prec_t prec) const {
    return WeightParams(N, alpha.to_float(prec), c.to_float(prec));
  }
};

/// w(k); zero at the boundary ghosts k = -1 and k = N+1, rejected beyond.
Scalar weight_at(const WeightParams& p, long k);

/// All lattice values w(0..N) by the running-product recurrence, w(0) = 1.
std::vector<Scalar> weight_table(const WeightParams& p);

/// Discrete external field u(x) = -1 + x(x-alpha)/(c(N+1-x)); pole at x = N+1.
/// On lattice points 1..N this equals (w(x-1) - w(x))/w(x).
Scalar potential_u(const WeightParams& p, const Scalar& x);

/// Terminating Kummer sum M(-m, b, z) = sum_{s=0..m} (-m)_s z^s / ((b)_s s!).
Scalar kummer_m_terminating(long m, const Scalar& b, const Scalar& z);

/// Generalized Laguerre polynomial L_n^(beta)(z) by its finite hypergeometric series.
Scalar laguerre(long n, const Scalar& beta, const Scalar& z);

}  // namespace gkraw
