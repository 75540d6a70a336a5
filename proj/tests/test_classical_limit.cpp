#include <doctest.h>

#include <random>

#include "gkraw/certify.hpp"
#include "gkraw/classical_limit.hpp"

using namespace gkraw;

TEST_SUITE("classical_limit") {
  TEST_CASE("closed-form coefficients") {
    Scalar third = Scalar::exact(1, 3);
    CHECK(krawtchouk_a_sq(80, third, 0) == 0L);
    CHECK(krawtchouk_b(80, third, 0) == Scalar::exact(80, 3));
    CHECK(krawtchouk_a_sq(80, third, 81) == 0L);
    CHECK(krawtchouk_a_sq(80, third, 1) == Scalar::exact(160, 9));
    CHECK_THROWS_AS(krawtchouk_a_sq(80, third, 82), domain_error);
    CHECK_THROWS_AS(krawtchouk_b(80, third, 81), domain_error);
    CHECK_THROWS_AS(krawtchouk_b(80, Scalar(1L), 1), domain_error);
    CHECK_THROWS_AS(krawtchouk_exact(80, Scalar(0L), 1), domain_error);
  }

  TEST_CASE("embedding hits the documented ray") {
    auto p = embed(80, Scalar::exact(1, 3), Scalar(2000L));
    CHECK(p.N == 80);
    CHECK(p.alpha == Scalar(-2000L));
    CHECK(p.c == Scalar(1000L));
    std::mt19937_64 gen(83);
    for (int i = 0; i < 20; ++i) {
      Scalar prob = Scalar::exact(1 + static_cast<long>(gen() % 18), 20);
      Scalar s = Scalar::exact(1 + static_cast<long>(gen() % 5000), 1 + static_cast<long>(gen() % 7));
      auto q = embed(10, prob, s);
      CHECK(-q.c / q.alpha == prob / (1L - prob));
    }
    CHECK_THROWS_AS(embed(10, Scalar(1L), Scalar(5L)), domain_error);
    CHECK_THROWS_AS(embed(10, Scalar::exact(1, 2), Scalar(0L)), domain_error);
  }

  TEST_CASE("deviation shrinks roughly like 1/s") {
    Scalar half = Scalar::exact(1, 2);
    Scalar d250 = limit_deviation(10, half, Scalar(250L));
    Scalar d500 = limit_deviation(10, half, Scalar(500L));
    Scalar d1000 = limit_deviation(10, half, Scalar(1000L));
    CHECK(d500 < d250);
    CHECK(d1000 < d500);
    double r1 = d250.to_double() / d500.to_double();
    double r2 = d500.to_double() / d1000.to_double();
    CHECK(r1 > 1.4);
    CHECK(r1 < 2.6);
    CHECK(r2 > 1.4);
    CHECK(r2 < 2.6);
  }

  TEST_CASE("limit suite on a small lattice") {
    auto rep = certify_limit(10, Scalar::exact(1, 2), {250, 500, 1000, 2000});
    CHECK(rep.passed);
  }
}
