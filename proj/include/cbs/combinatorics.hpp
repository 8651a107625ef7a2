#pragma once

#include "cbs/polynomial.hpp"
#include "cbs/rational.hpp"

namespace cbs {

/// C(n, k); zero when k < 0 or k > n. Requires n >= 0.
BigInt binomial(long n, long k);

BigInt factorial(long n);

/// Stirling numbers of the second kind: set partitions of an n-set into k blocks.
BigInt stirling2(long n, long k);

/// Rising factorial x(x+1)...(x+j-1); 1 when j == 0.
Rat pochhammer(const Rat& x, long j);

/// (y)_j as a polynomial in y.
Poly pochhammer_poly(long j);

/// Falling factorial y(y-1)...(y-k+1) as a polynomial in y.
Poly falling_factorial_poly(long k);

/// (2n+1)!! = 1*3*5*...*(2n+1).
BigInt double_factorial_odd(long n);

}  // namespace cbs
