#include "gkraw/dpsystem.hpp"

namespace gkraw {

XYState initial_state(const WeightParams& p) {
  Scalar num = kummer_m_terminating(p.N - 1, p.make(2) - p.alpha, -p.c);
  Scalar den = kummer_m_terminating(p.N, p.one() - p.alpha, -p.c);
  Scalar y0 = -(p.make(p.N + 1) + p.c - p.alpha) / p.N - p.c / (p.one() - p.alpha) * num / den;
  return XYState{0, p.zero(), std::move(y0)};
}

Scalar next_x(const WeightParams& p, const XYState& s) {
  if (s.n < 0 || s.n > p.N) throw domain_error("next_x index outside 0..N");
  Scalar sum = s.x + s.y;
  if (sum.is_zero())
    throw singular_trajectory_error(s.n, s.x.str(), s.y.str(), "x_n + y_n vanished");
  const long N = p.N;
  return -(s.y * (N + 1 + N * s.y) * (N + 1 - p.alpha + N * s.y)) / (p.c * N * sum) - s.y;
}

Scalar next_y(const WeightParams& p, long n1, const Scalar& x1, const Scalar& y_prev) {
  if (n1 < 1 || n1 > p.N) throw domain_error("next_y index outside 1..N");
  const long N = p.N;
  Scalar gap = N * x1 - n1;  // a_{n1}^2 / c
  if (gap.is_zero())
    throw singular_trajectory_error(n1, x1.str(), y_prev.str(),
                                    "N x_n - n vanished inside the lattice (a_n^2 = 0)");
  Scalar sum = x1 + y_prev;
  if (sum.is_zero())
    throw singular_trajectory_error(n1, x1.str(), y_prev.str(), "x_{n+1} + y_n vanished");
  return x1 * (N * x1 - (N + 1)) * (p.alpha - (N + 1) + N * x1) / (N * gap * sum) - x1;
}

XYState step(const WeightParams& p, const XYState& s) {
  if (s.n < 0 || s.n >= p.N)
    throw domain_error("full step needs n < N; the boundary x_{N+1} comes from next_x");
  Scalar x1 = next_x(p, s);
  Scalar y1 = next_y(p, s.n + 1, x1, s.y);
  return XYState{s.n + 1, std::move(x1), std::move(y1)};
}

Trajectory run_trajectory(const WeightParams& p) {
  Trajectory tr{p, {}, {}};
  tr.x.reserve(p.N + 2);
  tr.y.reserve(p.N + 1);
  XYState s = initial_state(p);
  tr.x.push_back(s.x);
  tr.y.push_back(s.y);
  for (long n = 0; n < p.N; ++n) {
    s = step(p, s);
    tr.x.push_back(s.x);
    tr.y.push_back(s.y);
  }
  tr.x.push_back(next_x(p, s));
  return tr;
}

JacobiCoefficients Trajectory::coefficients() const {
  const long N = params.N;
  JacobiCoefficients jc;
  jc.N = N;
  jc.a_sq.reserve(N + 2);
  jc.b.reserve(N + 1);
  for (long n = 0; n <= N + 1; ++n) jc.a_sq.push_back(params.c * (N * x[n] - n));
  for (long n = 0; n <= N; ++n)
    jc.b.push_back(-(N * y[n]) - (params.make(N + 1) + params.c - n - params.alpha));
  return jc;
}

JacobiCoefficients trajectory(const WeightParams& p) { return run_trajectory(p).coefficients(); }

XYState xy_from_coefficients(const WeightParams& p, const JacobiCoefficients& j, long n) {
  if (n < 0 || n > p.N) throw domain_error("xy index outside 0..N");
  Scalar x = (j.a_sq[n] / p.c + n) / p.N;
  Scalar y = -(j.b[n] + p.make(p.N + 1) + p.c - n - p.alpha) / p.N;
  return XYState{n, std::move(x), std::move(y)};
}

LadderQuantities ladder_quantities(const WeightParams& p, const JacobiCoefficients& j, long n) {
  if (n < 0 || n > p.N) throw domain_error("ladder index outside 0..N");
  return LadderQuantities{n, (j.b[n] + 1 + p.c - n - p.alpha) / p.c, j.a_sq[n] / p.c + n};
}

std::pair<Scalar, Scalar> compatibility_residuals(const WeightParams& p,
                                                  const JacobiCoefficients& j, long n,
                                                  const Scalar& x) {
  if (n < 1 || n > p.N - 1) throw domain_error("compatibility residuals need 1 <= n <= N-1");
  Scalar gap = p.make(p.N) - x;
  if (gap.is_zero()) throw domain_error("compatibility abscissa hits the pole x = N");

  // A_n(x)/a_n and B_n(x) in the closed ladder form.
  auto a_hat = [&](long idx) {
    return x / (p.c * gap) + ladder_quantities(p, j, idx).T / gap;
  };
  auto b_fun = [&](long idx) { return ladder_quantities(p, j, idx).t / gap; };

  Scalar sum_ahat = p.zero();
  for (long jj = 0; jj <= n; ++jj) sum_ahat += a_hat(jj);

  Scalar r1 = b_fun(n) + b_fun(n + 1) -
              ((x - j.b[n]) * a_hat(n) - potential_u(p, x + 1L) + sum_ahat);
  Scalar r2 = (j.a_sq[n + 1] * a_hat(n + 1) - j.a_sq[n] * a_hat(n - 1)) -
              ((x - j.b[n]) * b_fun(n + 1) - (x + 1 - j.b[n]) * b_fun(n) + 1);
  return {std::move(r1), std::move(r2)};
}

}  // namespace gkraw
