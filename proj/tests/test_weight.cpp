#include <doctest.h>

#include <random>

#include "gkraw/numerics.hpp"
#include "gkraw/weight.hpp"
#include "oracles.hpp"

using namespace gkraw;

namespace {
WeightParams random_params(std::mt19937_64& gen, long max_n = 12) {
  long N = 1 + static_cast<long>(gen() % max_n);
  Scalar alpha = 1L - Scalar::exact(1 + static_cast<long>(gen() % 400), 1 + static_cast<long>(gen() % 40));
  Scalar c = Scalar::exact(1 + static_cast<long>(gen() % 200), 1 + static_cast<long>(gen() % 30));
  return WeightParams(N, alpha, c);
}
}  // namespace

TEST_SUITE("weight") {
  TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(WeightParams(0, Scalar(0L), Scalar(1L)), domain_error);
    CHECK_THROWS_AS(WeightParams(3, Scalar(1L), Scalar(1L)), domain_error);
    CHECK_THROWS_AS(WeightParams(3, Scalar(2L), Scalar(1L)), domain_error);
    CHECK_THROWS_AS(WeightParams(3, Scalar(0L), Scalar(0L)), domain_error);
    CHECK_THROWS_AS(WeightParams(3, Scalar(0L), Scalar(-1L)), domain_error);
    CHECK_THROWS_AS(WeightParams(3, Scalar(0L), Scalar(1L).to_float(64)), mode_mismatch_error);
    // boundary-legal values
    WeightParams ok(1, Scalar::exact(99, 100), Scalar::exact(1, 1000));
    CHECK(ok.exact());
  }

  TEST_CASE("two-point lattice weight values") {
    WeightParams p(1, Scalar(0L), Scalar(1L));
    CHECK(weight_at(p, 0) == 1L);
    CHECK(weight_at(p, 1) == 1L);
    CHECK(weight_at(p, 2) == 0L);
    CHECK(weight_at(p, -1) == 0L);
    CHECK_THROWS_AS(weight_at(p, 3), domain_error);
    CHECK_THROWS_AS(weight_at(p, -2), domain_error);
  }

  TEST_CASE("running product agrees with the explicit factorial formula") {
    std::mt19937_64 gen(11);
    for (int i = 0; i < 25; ++i) {
      WeightParams p = random_params(gen);
      auto table = weight_table(p);
      for (long k = 0; k <= p.N; ++k) {
        CHECK(table[k] == oracles::weight_explicit(p, k));
        CHECK(table[k] == weight_at(p, k));
        CHECK(table[k] > 0L);
      }
    }
  }

  TEST_CASE("potential closed form and pole") {
    WeightParams p(1, Scalar(0L), Scalar(1L));
    CHECK(potential_u(p, Scalar(0L)) == -1L);
    CHECK(potential_u(p, Scalar(1L)) == 0L);
    CHECK_THROWS_AS(potential_u(p, Scalar(2L)), domain_error);  // x = N+1
    std::mt19937_64 gen(3);
    for (int i = 0; i < 10; ++i) CHECK(potential_u(random_params(gen), Scalar(0L)) == -1L);
  }

  TEST_CASE("potential matches the backward weight quotient on the lattice") {
    std::mt19937_64 gen(19);
    for (int i = 0; i < 20; ++i) {
      WeightParams p = random_params(gen);
      auto w = weight_table(p);
      for (long k = 1; k <= p.N; ++k)
        CHECK(potential_u(p, p.make(k)) == (w[k - 1] - w[k]) / w[k]);
    }
  }

  TEST_CASE("terminating Kummer sums") {
    CHECK(kummer_m_terminating(0, Scalar(2L), Scalar(-1L)) == 1L);
    CHECK(kummer_m_terminating(1, Scalar(1L), Scalar(-1L)) == 2L);
    CHECK(kummer_m_terminating(1, Scalar(2L), Scalar(-1L)) == Scalar::exact(3, 2));
    CHECK_THROWS_AS(kummer_m_terminating(-1, Scalar(1L), Scalar(1L)), domain_error);
    // (b)_s hits zero for b = -1 at s = 1
    CHECK_THROWS_AS(kummer_m_terminating(2, Scalar(-1L), Scalar(1L)), domain_error);
  }

  TEST_CASE("Laguerre values") {
    CHECK(laguerre(1, Scalar(0L), Scalar(-1L)) == 2L);  // L_1(z) = 1 - z
    CHECK(laguerre(0, Scalar::exact(5, 7), Scalar(42L)) == 1L);
    // L_2(z) = (z^2 - 4z + 2)/2 at z = 3 gives -1/2
    CHECK(laguerre(2, Scalar(0L), Scalar(3L)) == Scalar::exact(-1, 2));
  }

  TEST_CASE("Kummer sums are Laguerre polynomials") {
    // M(-N, 1-alpha, -c) = N!/(1-alpha)_N * L_N^(-alpha)(-c), exactly
    WeightParams micro(1, Scalar(0L), Scalar(1L));
    CHECK(kummer_m_terminating(1, Scalar(1L), Scalar(-1L)) ==
          oracles::factorial(micro, 1) / pochhammer(Scalar(1L), 1) *
              laguerre(1, Scalar(0L), Scalar(-1L)));
    std::mt19937_64 gen(23);
    for (int i = 0; i < 12; ++i) {
      WeightParams p = random_params(gen, 20);
      Scalar lhs = kummer_m_terminating(p.N, 1L - p.alpha, -p.c);
      Scalar rhs = oracles::factorial(p, p.N) /
                   pochhammer(1L - p.alpha, static_cast<unsigned long>(p.N)) *
                   laguerre(p.N, -p.alpha, -p.c);
      CHECK(lhs == rhs);
    }
  }
}
