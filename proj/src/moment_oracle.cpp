#include "gkraw/moment_oracle.hpp"

namespace gkraw {

Scalar moment(const WeightParams& p, unsigned long j) {
  auto w = weight_table(p);
  Scalar mu = p.zero();
  for (long k = 0; k <= p.N; ++k) mu += pow_ui(p.make(k), j) * w[k];
  return mu;
}

namespace {

Scalar lattice_inner(const std::vector<Scalar>& f, const std::vector<Scalar>& g,
                     const std::vector<Scalar>& w, const Scalar& zero) {
  Scalar s = zero;
  for (std::size_t k = 0; k < w.size(); ++k) s += f[k] * g[k] * w[k];
  return s;
}

}  // namespace

JacobiCoefficients stieltjes(const WeightParams& p) {
  const long N = p.N;
  const auto w = weight_table(p);

  JacobiCoefficients jc;
  jc.N = N;
  jc.a_sq.assign(N + 2, p.zero());
  jc.b.assign(N + 1, p.zero());

  std::vector<Scalar> prev(N + 1, p.zero());  // pi_{-1}
  std::vector<Scalar> cur(N + 1, p.one());    // pi_0
  Scalar norm_cur = p.zero();
  for (long k = 0; k <= N; ++k) norm_cur += w[k];

  for (long n = 0; n <= N; ++n) {
    if (norm_cur.is_zero())
      throw std::logic_error("monic norm vanished at degree " + std::to_string(n) +
                             "; impossible for a positive lattice measure");
    Scalar xmom = p.zero();
    for (long k = 0; k <= N; ++k) xmom += p.make(k) * cur[k] * cur[k] * w[k];
    jc.b[n] = xmom / norm_cur;

    std::vector<Scalar> next(N + 1, p.zero());
    for (long k = 0; k <= N; ++k)
      next[k] = (p.make(k) - jc.b[n]) * cur[k] - jc.a_sq[n] * prev[k];
    Scalar norm_next = lattice_inner(next, next, w, p.zero());
    jc.a_sq[n + 1] = norm_next / norm_cur;

    prev = std::move(cur);
    cur = std::move(next);
    norm_cur = std::move(norm_next);
  }
  return jc;
}

std::vector<Scalar> monic_lattice_values(const WeightParams& p, long degree) {
  if (degree < 0 || degree > p.N + 1) throw domain_error("monic degree outside 0..N+1");
  const long N = p.N;
  const auto w = weight_table(p);
  std::vector<Scalar> prev(N + 1, p.zero());
  std::vector<Scalar> cur(N + 1, p.one());
  Scalar norm_cur = p.zero();
  for (long k = 0; k <= N; ++k) norm_cur += w[k];
  Scalar a_sq = p.zero();
  for (long n = 0; n < degree; ++n) {
    Scalar xmom = p.zero();
    for (long k = 0; k <= N; ++k) xmom += p.make(k) * cur[k] * cur[k] * w[k];
    Scalar b = xmom / norm_cur;
    std::vector<Scalar> next(N + 1, p.zero());
    for (long k = 0; k <= N; ++k) next[k] = (p.make(k) - b) * cur[k] - a_sq * prev[k];
    Scalar norm_next = lattice_inner(next, next, w, p.zero());
    a_sq = norm_next / norm_cur;
    prev = std::move(cur);
    cur = std::move(next);
    norm_cur = std::move(norm_next);
  }
  return cur;
}

B0Forms hankel_b0(const WeightParams& p) {
  B0Forms forms{moment(p, 1) / moment(p, 0), p.zero()};
  Scalar num = kummer_m_terminating(p.N - 1, p.make(2) - p.alpha, -p.c);
  Scalar den = kummer_m_terminating(p.N, p.one() - p.alpha, -p.c);
  forms.kummer_form = p.c * p.N / (p.one() - p.alpha) * num / den;
  return forms;
}

std::vector<std::string> coefficient_violations(const WeightParams& p,
                                                const JacobiCoefficients& j) {
  std::vector<std::string> bad;
  if (!j.a_sq[0].is_zero()) bad.push_back("a_0^2 != 0");
  if (!j.a_sq[p.N + 1].is_zero()) bad.push_back("a_{N+1}^2 != 0 (closure defect " + j.a_sq[p.N + 1].str() + ")");
  for (long n = 1; n <= p.N; ++n)
    if (!(j.a_sq[n] > 0L)) bad.push_back("a_" + std::to_string(n) + "^2 <= 0");
  for (long n = 0; n <= p.N; ++n)
    if (!(j.b[n] > 0L) || !(j.b[n] < p.N)) bad.push_back("b_" + std::to_string(n) + " outside (0,N)");
  Scalar trace = p.zero();
  for (long n = 0; n <= p.N; ++n) trace += j.b[n];
  if (!(trace == p.make(p.N * (p.N + 1) / 2))) bad.push_back("trace identity sum b_n != N(N+1)/2");
  return bad;
}

}  // namespace gkraw
