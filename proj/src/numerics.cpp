#include "gkraw/numerics.hpp"

namespace gkraw {

Scalar pochhammer(const Scalar& a, unsigned long n) {
  Scalar prod = a.one();
  for (unsigned long j = 0; j < n; ++j) prod = prod * (a + static_cast<long>(j));
  return prod;
}

Scalar binomial(unsigned long n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return Scalar(0L);
  mpz_t z;
  mpz_init(z);
  mpz_bin_uiui(z, n, static_cast<unsigned long>(k));
  Rational r;
  mpq_set_z(r.raw(), z);
  mpz_clear(z);
  return Scalar(std::move(r));
}

namespace {
std::size_t middle_of(std::span<const Scalar> values) {
  if (values.size() < 3 || values.size() % 2 == 0)
    throw domain_error("central stencil needs an odd number of samples, at least 3");
  return values.size() / 2;
}
}  // namespace

Scalar central_difference(std::span<const Scalar> values, const Scalar& h, int order) {
  if (!(h > 0L)) throw domain_error("stencil step must be positive");
  const auto m = middle_of(values);
  switch (order) {
    case 1:
      return (values[m + 1] - values[m - 1]) / (2L * h);
    case 2:
      return (values[m + 1] - 2L * values[m] + values[m - 1]) / (h * h);
    default:
      throw domain_error("central_difference order must be 1 or 2");
  }
}

Scalar central_difference_order4(std::span<const Scalar> values, const Scalar& h) {
  if (!(h > 0L)) throw domain_error("stencil step must be positive");
  if (values.size() != 5) throw domain_error("fourth-order stencil needs exactly 5 samples");
  return (-values[4] + 8L * values[3] - 8L * values[1] + values[0]) / (12L * h);
}

}  // namespace gkraw
