#include "gkraw/weight.hpp"

#include "gkraw/numerics.hpp"

namespace gkraw {

WeightParams::WeightParams(long N_, Scalar alpha_, Scalar c_)
    : N(N_), alpha(std::move(alpha_)), c(std::move(c_)) {
  if (alpha.is_exact() != c.is_exact())
    throw mode_mismatch_error("weight parameters alpha and c must share one mode");
  if (N < 1) throw domain_error("lattice size N must be a positive integer");
  if (!(alpha < 1L)) throw domain_error("weight requires alpha < 1");
  if (!(c > 0L)) throw domain_error("weight requires c > 0");
}

std::vector<Scalar> weight_table(const WeightParams& p) {
  std::vector<Scalar> w;
  w.reserve(p.N + 1);
  w.push_back(p.one());
  for (long k = 0; k < p.N; ++k)
    w.push_back(w.back() * (p.N - k) * p.c / ((k + 1) * (p.one() - p.alpha + k)));
  return w;
}

Scalar weight_at(const WeightParams& p, long k) {
  if (k < -1 || k > p.N + 1)
    throw domain_error("weight index " + std::to_string(k) + " outside -1..N+1");
  if (k == -1 || k == p.N + 1) return p.zero();
  Scalar w = p.one();
  for (long j = 0; j < k; ++j) w = w * (p.N - j) * p.c / ((j + 1) * (p.one() - p.alpha + j));
  return w;
}

Scalar potential_u(const WeightParams& p, const Scalar& x) {
  Scalar gap = p.make(p.N + 1) - x;
  if (gap.is_zero()) throw domain_error("potential has a pole at x = N+1");
  return x * (x - p.alpha) / (p.c * gap) - 1L;
}

Scalar kummer_m_terminating(long m, const Scalar& b, const Scalar& z) {
  if (m < 0) throw domain_error("Kummer sum order must be nonnegative");
  Scalar sum = b.one();
  Scalar term = b.one();
  for (long s = 0; s < m; ++s) {
    Scalar factor = (b + s) * (s + 1);
    if (factor.is_zero()) throw domain_error("zero Pochhammer factor in Kummer sum at s = " + std::to_string(s));
    term = term * (s - m) * z / factor;
    sum += term;
  }
  return sum;
}

Scalar laguerre(long n, const Scalar& beta, const Scalar& z) {
  if (n < 0) throw domain_error("Laguerre degree must be nonnegative");
  Scalar fact = beta.one();
  for (long i = 2; i <= n; ++i) fact = fact * i;
  return pochhammer(beta + 1L, static_cast<unsigned long>(n)) / fact *
         kummer_m_terminating(n, beta + 1L, z);
}

}  // namespace gkraw
