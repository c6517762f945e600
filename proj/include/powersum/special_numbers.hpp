#pragma once

#include <vector>

#include "powersum/exact.hpp"

namespace powersum {

// The two classical sign conventions; they differ only at index 1.
enum class BernoulliConvention { FirstKind, SecondKind };

// Exact Bernoulli number B_index under the requested convention.
// FirstKind has B_1 = -1/2, SecondKind B_1 = +1/2. Memoized for the
// process lifetime; safe to call from any thread.
Rational bernoulli(unsigned index, BernoulliConvention convention);

// Classical Bernoulli polynomial B_n(x) = sum_k C(n,k) B_k x^{n-k},
// with FirstKind coefficients.
Rational bernoulli_polynomial_at(unsigned n, const Rational& x);

// Stirling number of the second kind. k > n yields 0. Memoized triangle.
BigInt stirling2(unsigned n, unsigned k);

// Copy of triangle row n: entries (n,0) ... (n,n).
std::vector<BigInt> stirling2_row(unsigned n);

// The integer (k/(k-i)) * C(k-i, i), via the identity 2*C(k-i,i) - C(k-i-1,i).
// Requires k >= 1 and 0 <= i <= k/2.
BigInt lucas_coeff(unsigned k, unsigned i);

}  // namespace powersum
