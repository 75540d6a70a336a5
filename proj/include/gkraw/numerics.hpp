#pragma once

#include <span>

#include "gkraw/scalar.hpp"

namespace gkraw {

/// Rising factorial (a)_n = a(a+1)...(a+n-1); empty product for n = 0.
Scalar pochhammer(const Scalar& a, unsigned long n);

/// Exact binomial coefficient; 0 outside 0 <= k <= n.
Scalar binomial(unsigned long n, long k);

/// Second-order central stencil at the middle of an odd-length window of
/// equispaced samples: order 1 gives (f+ - f-)/2h, order 2 gives (f+ - 2f0 + f-)/h^2.
Scalar central_difference(std::span<const Scalar> values, const Scalar& h, int order);

/// Fourth-order five-point first derivative at the middle sample.
Scalar central_difference_order4(std::span<const Scalar> values, const Scalar& h);

}  // namespace gkraw
