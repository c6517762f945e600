#pragma once

#include <utility>

#include "powersum/exact.hpp"
#include "powersum/report.hpp"

namespace powersum {

// Girard-Waring power-sum expansion: equals x^n + y^n for n >= 1.
BigInt gw_power_sum_rhs(const BigInt& x, const BigInt& y, unsigned n);

// Binet form: equals (x^{n+1} - y^{n+1})/(x - y) for n >= 0, x != y.
BigInt gw_binet_rhs(const BigInt& x, const BigInt& y, unsigned n);

// Generalized Binet form for a sequence with seeds a0, a1 and characteristic
// roots x != y; returns (lhs, rhs) for the caller to compare. n >= 2.
std::pair<Rational, Rational> gw_general_binet_lhs_rhs(const BigInt& x, const BigInt& y,
                                                       const BigInt& a0, const BigInt& a1,
                                                       unsigned n);

// Zero-sum variant (x + y + z = 0, n >= 2): equals x^n + y^n - z^n for even n
// and x^n + y^n + z^n for odd n.
BigInt gw_zero_sum_rhs(const BigInt& x, const BigInt& y, const BigInt& z, unsigned n);

// The parity-adjusted left-hand side the zero-sum expansion must match.
BigInt gw_zero_sum_lhs(const BigInt& x, const BigInt& y, const BigInt& z, unsigned n);

// pxy(x+y) | x^p + y^p - (x+y)^p for prime p >= 3 and x, y >= 1.
DivisibilityReport check_prop_pxy(const BigInt& x, const BigInt& y, const BigInt& p);

}  // namespace powersum
