#include "gkraw/classical_limit.hpp"

namespace gkraw {

namespace {
void require_probability(const Scalar& p) {
  if (!(p > 0L) || !(p < 1L)) throw domain_error("Krawtchouk parameter p must lie in (0,1)");
}
}  // namespace

Scalar krawtchouk_a_sq(long N, const Scalar& p, long n) {
  require_probability(p);
  if (n < 0 || n > N + 1) throw domain_error("Krawtchouk a^2 index outside 0..N+1");
  return n * p * (1L - p) * (N + 1 - n);
}

Scalar krawtchouk_b(long N, const Scalar& p, long n) {
  require_probability(p);
  if (n < 0 || n > N) throw domain_error("Krawtchouk b index outside 0..N");
  return p * (N - n) + n * (1L - p);
}

std::pair<Scalar, Scalar> krawtchouk_exact(long N, const Scalar& p, long n) {
  return {krawtchouk_a_sq(N, p, n), krawtchouk_b(N, p, n)};
}

WeightParams embed(long N, const Scalar& p, const Scalar& s) {
  require_probability(p);
  if (!(s > 0L)) throw domain_error("embedding scale s must be positive");
  return WeightParams(N, -s, s * p / (1L - p));
}

Scalar limit_deviation(long N, const Scalar& p, const Scalar& s) {
  auto gen = trajectory(embed(N, p, s));
  Scalar worst = p.zero();
  auto consider = [&](const Scalar& got, const Scalar& want) {
    Scalar rel = (got - want).abs() / want;
    if (rel > worst) worst = rel;
  };
  for (long n = 1; n <= N; ++n) consider(gen.a_sq[n], krawtchouk_a_sq(N, p, n));
  for (long n = 0; n <= N; ++n) consider(gen.b[n], krawtchouk_b(N, p, n));
  return worst;
}

}  // namespace gkraw
