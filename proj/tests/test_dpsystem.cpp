#include <doctest.h>

#include <random>

#include "gkraw/dpsystem.hpp"
#include "oracles.hpp"

using namespace gkraw;

namespace {
WeightParams random_params(std::mt19937_64& gen, long max_n = 12) {
  long N = 1 + static_cast<long>(gen() % max_n);
  Scalar alpha = 1L - Scalar::exact(1 + static_cast<long>(gen() % 500), 1 + static_cast<long>(gen() % 30));
  Scalar c = Scalar::exact(1 + static_cast<long>(gen() % 90), 1 + static_cast<long>(gen() % 15));
  return WeightParams(N, alpha, c);
}

// Residuals of the two coupled equations at a full state pair.
std::pair<Scalar, Scalar> system_residuals(const WeightParams& p, const XYState& lo,
                                           const XYState& hi) {
  const long N = p.N;
  Scalar r1 = (lo.x + lo.y) * (hi.x + lo.y) +
              lo.y * (N + 1 + N * lo.y) * (N + 1 - p.alpha + N * lo.y) / (p.c * N);
  Scalar r2 = (hi.x + hi.y) * (hi.x + lo.y) -
              hi.x * (N * hi.x - (N + 1)) * (p.alpha - (N + 1) + N * hi.x) /
                  (N * (N * hi.x - hi.n));
  return {r1, r2};
}
}  // namespace

TEST_SUITE("dpsystem") {
  TEST_CASE("initial state on the two-point lattice") {
    WeightParams p(1, Scalar(0L), Scalar(1L));
    auto s = initial_state(p);
    CHECK(s.n == 0);
    CHECK(s.x == 0L);
    CHECK(s.y == Scalar::exact(-7, 2));
  }

  TEST_CASE("x_0 is always zero and y_0 encodes b_0") {
    std::mt19937_64 gen(61);
    for (int i = 0; i < 15; ++i) {
      WeightParams p = random_params(gen, 20);
      auto s = initial_state(p);
      CHECK(s.x == 0L);
      Scalar b0 = hankel_b0(p).moment_ratio;
      CHECK(s.y == -(b0 + p.make(p.N + 1) + p.c - p.alpha) / p.N);
    }
  }

  TEST_CASE("hand-checked step chain at N=1") {
    WeightParams p(1, Scalar(0L), Scalar(1L));
    auto s1 = step(p, initial_state(p));
    CHECK(s1.x == Scalar::exact(5, 4));
    CHECK(s1.y == Scalar::exact(-5, 2));
    CHECK(next_x(p, s1) == 2L);  // boundary: N x_2 - 2 = 0
    CHECK_THROWS_AS(step(p, s1), domain_error);
  }

  TEST_CASE("each step satisfies both system equations identically") {
    std::mt19937_64 gen(67);
    for (int i = 0; i < 10; ++i) {
      WeightParams p = random_params(gen);
      XYState s = initial_state(p);
      for (long n = 0; n < p.N; ++n) {
        XYState t = step(p, s);
        auto [r1, r2] = system_residuals(p, s, t);
        CHECK(r1 == 0L);
        CHECK(r2 == 0L);
        s = t;
      }
    }
  }

  TEST_CASE("trajectory equals the Stieltjes table entry for entry") {
    std::mt19937_64 gen(71);
    for (int i = 0; i < 8; ++i) {
      WeightParams p = random_params(gen);
      CHECK(oracles::tables_equal(trajectory(p), stieltjes(p)));
    }
  }

  TEST_CASE("boundary closure and interior positivity") {
    std::mt19937_64 gen(73);
    for (int i = 0; i < 10; ++i) {
      WeightParams p = random_params(gen);
      auto tr = run_trajectory(p);
      CHECK(p.N * tr.x[p.N + 1] == Scalar(p.N + 1));
      for (long n = 1; n <= p.N; ++n) CHECK(p.c * (p.N * tr.x[n] - n) > 0L);
      auto jc = tr.coefficients();
      CHECK(jc.a_sq[0] == 0L);
      CHECK(jc.a_sq[p.N + 1] == 0L);
      CHECK(coefficient_violations(p, jc).empty());
    }
  }

  TEST_CASE("singular-state reporting") {
    WeightParams p(3, Scalar(0L), Scalar(1L));
    XYState bad{1, Scalar(1L), Scalar(-1L)};
    CHECK_THROWS_AS(next_x(p, bad), singular_trajectory_error);
    try {
      next_x(p, bad);
    } catch (const singular_trajectory_error& e) {
      CHECK(e.index() == 1);
      CHECK(e.x_str() == "1");
      CHECK(e.y_str() == "-1");
    }
    // N x - n = 0 strictly inside the lattice
    CHECK_THROWS_AS(next_y(p, 1, Scalar::exact(1, 3), Scalar(5L)), singular_trajectory_error);
    CHECK_THROWS_AS(next_y(p, 0, Scalar(1L), Scalar(1L)), domain_error);
    CHECK_THROWS_AS(next_y(p, 4, Scalar(1L), Scalar(1L)), domain_error);
  }

  TEST_CASE("ladder quantities and the substitution back to (x, y)") {
    WeightParams p(1, Scalar(0L), Scalar(1L));
    auto jc = trajectory(p);
    auto l1 = ladder_quantities(p, jc, 1);
    CHECK(l1.t == Scalar::exact(5, 4));
    CHECK(l1.T == Scalar::exact(3, 2));

    std::mt19937_64 gen(79);
    for (int i = 0; i < 8; ++i) {
      WeightParams q = random_params(gen);
      auto tr = run_trajectory(q);
      auto table = tr.coefficients();
      CHECK(ladder_quantities(q, table, 0).t == 0L);
      for (long n = 0; n <= q.N; ++n) {
        auto lq = ladder_quantities(q, table, n);
        CHECK(lq.t / q.N == tr.x[n]);
        CHECK(-(q.c * lq.T) / q.N - 1 == tr.y[n]);
        auto xy = xy_from_coefficients(q, table, n);
        CHECK(xy.x == tr.x[n]);
        CHECK(xy.y == tr.y[n]);
        // linear ladder relation
        CHECK(q.c * lq.T - table.b[n] - 1 + q.alpha - q.c + n == 0L);
      }
    }
  }

  TEST_CASE("compatibility residuals vanish identically") {
    WeightParams p(2, Scalar::exact(1, 2), Scalar(1L));
    auto jc = trajectory(p);
    for (const char* xs : {"1/3", "-5", "7/2", "4"}) {
      auto [r1, r2] = compatibility_residuals(p, jc, 1, Scalar::parse_exact(xs));
      CHECK(r1 == 0L);
      CHECK(r2 == 0L);
    }
    WeightParams p6(6, Scalar::exact(1, 2), Scalar(1L));
    auto jc6 = trajectory(p6);
    for (long n = 1; n <= 5; ++n) {
      auto [r1, r2] = compatibility_residuals(p6, jc6, n, Scalar::exact(-11, 7));
      CHECK(r1 == 0L);
      CHECK(r2 == 0L);
    }
    CHECK_THROWS_AS(compatibility_residuals(p6, jc6, 3, Scalar(6L)), domain_error);  // pole x=N
    CHECK_THROWS_AS(compatibility_residuals(p6, jc6, 0, Scalar(1L)), domain_error);
    CHECK_THROWS_AS(compatibility_residuals(p6, jc6, 6, Scalar(1L)), domain_error);
  }

  TEST_CASE("a perturbed table breaks the compatibility identity") {
    WeightParams p(6, Scalar::exact(1, 2), Scalar(1L));
    auto jc = trajectory(p);
    jc.b[3] += Scalar::exact(1, 1000);
    auto [r1, r2] = compatibility_residuals(p, jc, 3, Scalar::exact(1, 3));
    CHECK_FALSE(r1.is_zero());
  }

  TEST_CASE("large-lattice shape: a_n^2 rises to a single maximum then falls") {
    WeightParams p(80, Scalar(-1L), Scalar(2L));
    auto jc = trajectory(p);
    long peak = 1;
    for (long n = 2; n <= 80; ++n)
      if (jc.a_sq[n] > jc.a_sq[peak]) peak = n;
    for (long n = 1; n < peak; ++n) CHECK(jc.a_sq[n] < jc.a_sq[n + 1]);
    for (long n = peak; n <= 80; ++n) CHECK(jc.a_sq[n + 1] < jc.a_sq[n]);
    CHECK(peak > 1);
    CHECK(peak < 80);
  }

  TEST_CASE("float-mode trajectory tracks the exact one") {
    WeightParams pe(8, Scalar::exact(-1, 3), Scalar(2L));
    auto exact = trajectory(pe);
    auto rounded = trajectory(pe.to_float(256));
    for (long n = 1; n <= 8; ++n)
      CHECK((rounded.a_sq[n] - exact.a_sq[n].to_float(256)).abs().to_double() < 1e-60);
    CHECK(rounded.a_sq[9].abs().to_double() < 1e-55);
  }
}
