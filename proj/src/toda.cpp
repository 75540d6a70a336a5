#include "gkraw/toda.hpp"

#include "gkraw/numerics.hpp"

namespace gkraw {

namespace {

struct TodaRhs {
  Scalar rhs_a;
  Scalar rhs_b;
};

TodaRhs rhs_at(const WeightParams& p, const JacobiCoefficients& j, long n) {
  return {j.a_sq[n] / p.c * (j.b[n] - j.b[n - 1]), (j.a_sq[n + 1] - j.a_sq[n]) / p.c};
}

void check_grid(const WeightParams& p, long n, const Scalar& h, long arms) {
  if (n < 1 || n > p.N) throw domain_error("Toda residual needs 1 <= n <= N");
  if (!(h > 0L)) throw domain_error("Toda step h must be positive");
  if (!(p.c - arms * h > 0L)) throw domain_error("Toda grid leaves c > 0");
}

}  // namespace

TodaResidual toda_residual(const WeightParams& p, long n, const Scalar& h) {
  check_grid(p, n, h, 1);
  const auto lo = trajectory(p.with_c(p.c - h));
  const auto mid = trajectory(p);
  const auto hi = trajectory(p.with_c(p.c + h));

  const Scalar a_vals[3] = {lo.a_sq[n], mid.a_sq[n], hi.a_sq[n]};
  const Scalar b_vals[3] = {lo.b[n], mid.b[n], hi.b[n]};
  Scalar da = central_difference(a_vals, h, 1);
  Scalar db = central_difference(b_vals, h, 1);

  auto rhs = rhs_at(p, mid, n);
  return {da - rhs.rhs_a, db - rhs.rhs_b};
}

TodaResidual toda_residual_order4(const WeightParams& p, long n, const Scalar& h) {
  check_grid(p, n, h, 2);
  std::vector<Scalar> a_vals, b_vals;
  JacobiCoefficients mid;
  for (long j = -2; j <= 2; ++j) {
    auto tab = trajectory(p.with_c(p.c + j * h));
    a_vals.push_back(tab.a_sq[n]);
    b_vals.push_back(tab.b[n]);
    if (j == 0) mid = std::move(tab);
  }
  Scalar da = central_difference_order4(a_vals, h);
  Scalar db = central_difference_order4(b_vals, h);
  auto rhs = rhs_at(p, mid, n);
  return {da - rhs.rhs_a, db - rhs.rhs_b};
}

}  // namespace gkraw
