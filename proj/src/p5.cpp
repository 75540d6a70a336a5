#include "gkraw/p5.hpp"

namespace gkraw {

P5Params p5_params(long n, long N, const Scalar& alpha) {
  Scalar am = alpha - (N + 1);
  Scalar nm = alpha.make(n - N);
  return P5Params{am * am / 2, -(nm * nm) / 2, -(alpha + n), alpha.make(-1) / 2};
}

namespace {

void require_regular_y(const Scalar& y) {
  if (y.is_zero() || (y - 1L).is_zero())
    throw domain_error("transformation singular at y in {0,1}");
}

}  // namespace

Scalar backward_y_np1(const WeightParams& p, long n, const Scalar& y, const Scalar& y_n) {
  const long N = p.N;
  Scalar den = N * (N - n + (1 + n + N * y_n) * y);
  if (den.is_zero()) throw domain_error("y_{n+1} relation denominator vanished");
  return -((1 + N + N * y * y_n) * (N - n + (1 + N - p.alpha + N * y_n) * y)) / den;
}

Scalar backward_y_nm1(const WeightParams& p, long n, const Scalar& y, const Scalar& y_n) {
  const long N = p.N;
  Scalar common = 1 + p.c + N - p.alpha + N * y_n - (1 + N - p.alpha + N * y_n) * y;
  Scalar big_p = (N + 1) * p.c +
                 N * (p.c - n + 2 + 2 * N - p.alpha + N * y_n +
                      (n - 2 * N - 2 + p.alpha - N * y_n) * y) *
                     y_n;
  Scalar den = N * (y - 1) * (n * p.c + N * common * y_n);
  if (den.is_zero()) throw domain_error("y_{n-1} relation denominator vanished");
  return common * big_p / den;
}

RecoveredY recover_y(const WeightParams& p, long n, const Scalar& y_n, const Scalar& y_np1,
                     const Scalar& y_nm1, mpfr_prec_t prec) {
  if (n < 1 || n > p.N - 1) throw domain_error("recover_y needs an interior index 1 <= n <= N-1");
  const long N = p.N;

  // The y_{n+1} relation cleared of its denominator is q2 y^2 + q1 y + q0 = 0.
  Scalar q2 = N * y_n * (1 + N - p.alpha + N * y_n);
  Scalar q1 = (1 + N) * (1 + N - p.alpha + N * y_n) + N * y_n * (N - n) +
              N * y_np1 * (1 + n + N * y_n);
  Scalar q0 = (N - n) * (1 + N + N * y_np1);

  Scalar a = q2.to_float(prec), b = q1.to_float(prec), c0 = q0.to_float(prec);
  WeightParams pf = p.exact() ? p.to_float(prec) : p;
  Scalar ynf = y_n.to_float(prec), ynm1f = y_nm1.to_float(prec);

  std::vector<Scalar> roots;
  if (a.is_zero()) {
    if (b.is_zero()) throw domain_error("degenerate y_{n+1} relation (not a quadratic)");
    roots.push_back(-c0 / b);
  } else {
    Scalar disc = b * b - 4L * a * c0;
    if (disc.sign() < 0) throw domain_error("no real root in the y recovery quadratic");
    Scalar root_disc = disc.sqrt();
    if (root_disc.is_zero()) {
      roots.push_back(-b / (2L * a));
    } else if (b.is_zero()) {
      roots.push_back(root_disc / (2L * a));
      roots.push_back(-root_disc / (2L * a));
    } else {
      // Cancellation-free pairing.
      Scalar qq = -(b + (b.sign() > 0 ? root_disc : -root_disc)) / 2L;
      roots.push_back(qq / a);
      roots.push_back(c0 / qq);
    }
  }

  auto crosscheck = [&](const Scalar& root) -> Scalar {
    return (backward_y_nm1(pf, n, root, ynf) - ynm1f).abs();
  };

  Scalar r0 = crosscheck(roots[0]);
  if (roots.size() == 1) return RecoveredY{roots[0], r0, roots[0], r0, false};
  Scalar r1 = crosscheck(roots[1]);

  Scalar pass_tol = (ynm1f.abs() + 1L) / pow_ui(ynm1f.make(2), static_cast<unsigned long>(prec / 4));
  bool first = r0 <= r1;
  const Scalar& best = first ? roots[0] : roots[1];
  const Scalar& other = first ? roots[1] : roots[0];
  const Scalar& best_res = first ? r0 : r1;
  const Scalar& other_res = first ? r1 : r0;
  if (best_res > pass_tol)
    throw domain_error("both roots fail the y_{n-1} cross-check; residuals " + best_res.str() +
                       " and " + other_res.str());
  bool ambiguous = other_res <= pass_tol;
  return RecoveredY{best, best_res, other, other_res, ambiguous};
}

Scalar recover_y_prime(const WeightParams& p, long n, const Scalar& y, const Scalar& y_n) {
  require_regular_y(y);
  const long N = p.N;
  return (N - n + y * (1 + n + p.c - p.alpha + (p.alpha - (N + 1)) * y) -
          2 * N * (y - 1) * y * y_n) /
         p.c;
}

Scalar forward_y_n(const WeightParams& p, long n, const P5Sample& s) {
  require_regular_y(s.y);
  const long N = p.N;
  return (N - n + s.y * (1 + n + s.c - p.alpha + (p.alpha - (N + 1)) * s.y) - s.c * s.y_prime) /
         (2 * N * (s.y - 1) * s.y);
}

Scalar forward_x_n(const WeightParams& p, long n, const P5Sample& s) {
  require_regular_y(s.y);
  const long N = p.N;
  Scalar a1 = (1 + N - p.alpha) * (1 + N - p.alpha);
  Scalar a2 = 2L * (1 + N - p.alpha) * (1 + s.c + N - p.alpha);
  Scalar a3 = (1 + s.c + n - p.alpha) * (1 + s.c - n + 2 * N - p.alpha);
  Scalar cyp = s.c * s.y_prime;
  Scalar y2 = s.y * s.y;
  Scalar num = (cyp + n - N) * (cyp + n - N) - 2L * (s.y.make(n - N)) * (n - N + cyp) * s.y -
               a1 * y2 * y2 + a2 * y2 * s.y - a3 * y2;
  Scalar den = 4 * N * s.c * (s.y - 1) * y2;
  return num / den;
}

Scalar y_n_prime_from_system(const WeightParams& p, const XYState& s) {
  const long N = p.N;
  Scalar sum = s.x + s.y;
  if (sum.is_zero())
    throw singular_trajectory_error(s.n, s.x.str(), s.y.str(), "x_n + y_n vanished");
  return sum + s.y * (N + 1 + N * s.y) * (N + 1 - p.alpha + N * s.y) / (p.c * N * sum);
}

P5ResidualPair p5_residual(const P5Params& par, const std::array<P5Sample, 3>& samples) {
  const Scalar& c = samples[1].c;
  const Scalar& y = samples[1].y;
  const Scalar& yp = samples[1].y_prime;
  require_regular_y(y);

  // Parameters are often exact while samples run in float mode.
  auto coerce = [&](const Scalar& v) {
    return (v.is_exact() && !y.is_exact()) ? v.to_float(y.flt().precision()) : v;
  };
  Scalar pA = coerce(par.A), pB = coerce(par.B), pC = coerce(par.C), pD = coerce(par.D);

  Scalar h = samples[2].c - samples[1].c;
  Scalar h_lo = samples[1].c - samples[0].c;
  if (!(h > 0L)) throw domain_error("P5 samples must be increasing in c");
  if (((h - h_lo).abs() * pow_ui(h.make(2), 16)) > h.abs())
    throw domain_error("P5 samples must be equispaced in c");

  Scalar ypp_a = (samples[2].y_prime - samples[0].y_prime) / (2L * h);
  Scalar ypp_b = (samples[2].y - 2L * samples[1].y + samples[0].y) / (h * h);

  Scalar rhs = (1L / (2L * y) + 1L / (y - 1)) * yp * yp - yp / c +
               (y - 1) * (y - 1) / (c * c) * (pA * y + pB / y) + pC * y / c +
               pD * y * (y + 1) / (y - 1);
  return {ypp_a - rhs, ypp_b - rhs};
}

Scalar cosgrove_residual(long n, long N, const Scalar& alpha, std::span<const Scalar> y_values,
                         const Scalar& z0, const Scalar& hz) {
  if (y_values.size() != 5) throw domain_error("Cosgrove residual needs 5 samples");
  if (!(hz > 0L)) throw domain_error("Cosgrove step must be positive");
  if (!(z0 - 2L * hz > 0L)) throw domain_error("Cosgrove z-grid crosses z = 0");

  Scalar shift = 2L * alpha - 4 * N + 2 * n - 3;
  std::vector<Scalar> v;
  v.reserve(5);
  for (const auto& yv : y_values) v.push_back(4 * N * yv - shift);

  Scalar alpha1 = 4L * (2L * alpha - 4 * N + 6 * n - 1);
  Scalar beta1 = alpha.make(2 * (2 * n + 1) * (6 * n - 8 * N - 5)) + 8 * (2 * n + 1) * alpha -
                 8L * alpha * alpha;
  Scalar gamma1 = 4L * (2L * alpha - 4 * N + 2 * n - 3) *
                  (alpha.make(4 * n * n + 4 * n + 1) - 4L * alpha * alpha);

  Scalar vm = v[2];
  Scalar vp = (v[3] - v[1]) / (2L * hz);
  Scalar vpp = (v[3] - 2L * v[2] + v[1]) / (hz * hz);

  Scalar lhs_core = vpp - 6L * vm * vm - alpha1 * vm - beta1;
  Scalar weight = vm / z0 - 2L * z0;
  Scalar rhs_core = vp * vp - 4L * vm * vm * vm - alpha1 * vm * vm - 2L * beta1 * vm - gamma1;
  return lhs_core * lhs_core - weight * weight * rhs_core;
}

}  // namespace gkraw
