#pragma once

#include <vector>

#include "gkraw/weight.hpp"

namespace gkraw {

/// Three-term recurrence data of the orthonormal polynomials:
///   x p_n = a_{n+1} p_{n+1} + b_n p_n + a_n p_{n-1}.
/// a_sq holds a_n^2 for n = 0..N+1 (a_0^2 = 0 and, for the true coefficients,
/// a_{N+1}^2 = 0 by the finite support); b holds b_n for n = 0..N.
struct JacobiCoefficients {
  long N = 0;
  std::vector<Scalar> a_sq;
  std::vector<Scalar> b;
};

/// Power moment mu_j = sum_k k^j w(k) over the lattice.
Scalar moment(const WeightParams& p, unsigned long j);

/// Recurrence coefficients by the Stieltjes procedure, run on the monic
/// polynomials' lattice values (stays in the exact field; no square roots).
/// a_sq[N+1] is the computed closure value <pi_{N+1},pi_{N+1}>/<pi_N,pi_N>,
/// exactly 0 in exact mode.
JacobiCoefficients stieltjes(const WeightParams& p);

/// Lattice values of the monic polynomial of degree `degree` (0..N+1),
/// from the same recursion. Degree N+1 vanishes identically on the lattice.
std::vector<Scalar> monic_lattice_values(const WeightParams& p, long degree);

struct B0Forms {
  Scalar moment_ratio;  // mu_1 / mu_0
  Scalar kummer_form;   // cN/(1-alpha) * M(-N+1,2-alpha,-c) / M(-N,1-alpha,-c)
};

/// b_0 two ways; the forms agree exactly in exact mode.
B0Forms hankel_b0(const WeightParams& p);

/// Violated structural invariants of an exact coefficient table: boundary
/// zeros of a^2, interior positivity, 0 < b_n < N, and the trace identity
/// sum b_n = 0+1+...+N (the Jacobi matrix spectrum is the support).
std::vector<std::string> coefficient_violations(const WeightParams& p,
                                                const JacobiCoefficients& j);

}  // namespace gkraw
