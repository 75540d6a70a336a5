#include <doctest.h>

#include <random>

#include "gkraw/moment_oracle.hpp"
#include "oracles.hpp"

using namespace gkraw;

namespace {
WeightParams random_params(std::mt19937_64& gen, long max_n = 8) {
  long N = 1 + static_cast<long>(gen() % max_n);
  Scalar alpha = 1L - Scalar::exact(1 + static_cast<long>(gen() % 300), 1 + static_cast<long>(gen() % 25));
  Scalar c = Scalar::exact(1 + static_cast<long>(gen() % 120), 1 + static_cast<long>(gen() % 20));
  return WeightParams(N, alpha, c);
}
}  // namespace

TEST_SUITE("moment_oracle") {
  TEST_CASE("two-point moments") {
    WeightParams p(1, Scalar(0L), Scalar(1L));
    CHECK(moment(p, 0) == 2L);
    CHECK(moment(p, 1) == 1L);
  }

  TEST_CASE("moments positive and equal to the explicit formula") {
    std::mt19937_64 gen(31);
    for (int i = 0; i < 15; ++i) {
      WeightParams p = random_params(gen);
      CHECK(moment(p, 0) > 0L);
      for (unsigned long j = 0; j <= 4; ++j) CHECK(moment(p, j) == oracles::moment_explicit(p, j));
    }
  }

  TEST_CASE("two-point lattice by hand") {
    WeightParams p(1, Scalar(0L), Scalar(1L));
    auto jc = stieltjes(p);
    CHECK(jc.a_sq[0] == 0L);
    CHECK(jc.a_sq[1] == Scalar::exact(1, 4));
    CHECK(jc.a_sq[2] == 0L);
    CHECK(jc.b[0] == Scalar::exact(1, 2));
    CHECK(jc.b[1] == Scalar::exact(1, 2));
    CHECK(oracles::tables_equal(jc, oracles::gram_schmidt(p)));
    CHECK(oracles::tables_equal(jc, oracles::hankel(p)));
  }

  TEST_CASE("three-point lattice against both desk oracles") {
    WeightParams p(2, Scalar::exact(1, 2), Scalar(1L));
    auto jc = stieltjes(p);
    CHECK(oracles::tables_equal(jc, oracles::gram_schmidt(p)));
    CHECK(oracles::tables_equal(jc, oracles::hankel(p)));
  }

  TEST_CASE("random desk-scale parameters against the Gram-Schmidt oracle") {
    std::mt19937_64 gen(37);
    for (int i = 0; i < 8; ++i) {
      WeightParams p = random_params(gen, 6);
      CHECK(oracles::tables_equal(stieltjes(p), oracles::gram_schmidt(p)));
    }
  }

  TEST_CASE("b_0 is the first moment ratio") {
    std::mt19937_64 gen(41);
    for (int i = 0; i < 15; ++i) {
      WeightParams p = random_params(gen);
      CHECK(stieltjes(p).b[0] == moment(p, 1) / moment(p, 0));
    }
  }

  TEST_CASE("b_0 hypergeometric closed form") {
    WeightParams micro(1, Scalar(0L), Scalar(1L));
    auto forms = hankel_b0(micro);
    CHECK(forms.moment_ratio == Scalar::exact(1, 2));
    CHECK(forms.kummer_form == Scalar::exact(1, 2));
    std::mt19937_64 gen(43);
    for (int i = 0; i < 15; ++i) {
      auto f = hankel_b0(random_params(gen, 25));
      CHECK(f.moment_ratio == f.kummer_form);
    }
  }

  TEST_CASE("pointwise orthogonality certificate") {
    WeightParams p(4, Scalar::exact(-3, 7), Scalar(2L));
    auto w = weight_table(p);
    std::vector<std::vector<Scalar>> polys;
    for (long d = 0; d <= p.N; ++d) polys.push_back(monic_lattice_values(p, d));
    for (long m = 0; m <= p.N; ++m)
      for (long n = 0; n < m; ++n) {
        Scalar ip = p.zero();
        for (long k = 0; k <= p.N; ++k) ip += polys[m][k] * polys[n][k] * w[k];
        CHECK(ip == 0L);
      }
  }

  TEST_CASE("degree N+1 monic vanishes on the whole lattice") {
    std::mt19937_64 gen(47);
    for (int i = 0; i < 6; ++i) {
      WeightParams p = random_params(gen, 7);
      for (const auto& v : monic_lattice_values(p, p.N + 1)) CHECK(v == 0L);
      CHECK(stieltjes(p).a_sq[p.N + 1] == 0L);
    }
  }

  TEST_CASE("structural invariants hold on stieltjes output") {
    std::mt19937_64 gen(53);
    for (int i = 0; i < 10; ++i) {
      WeightParams p = random_params(gen, 10);
      auto bad = coefficient_violations(p, stieltjes(p));
      CHECK(bad.empty());
    }
  }

  TEST_CASE("float-mode stieltjes closes the boundary approximately") {
    WeightParams p = WeightParams(6, Scalar::exact(1, 2), Scalar(1L)).to_float(192);
    auto jc = stieltjes(p);
    CHECK(jc.a_sq[7].abs().to_double() < 1e-40);
    auto exact = stieltjes(WeightParams(6, Scalar::exact(1, 2), Scalar(1L)));
    for (long n = 0; n <= 6; ++n)
      CHECK((jc.b[n] - exact.b[n].to_float(192)).abs().to_double() < 1e-45);
  }
}
