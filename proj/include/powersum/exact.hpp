#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace powersum {

// Universal exact scalars. BigInt is an arbitrary-precision signed integer,
// Rational an always-normalized fraction (lowest terms, positive denominator).
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k). Returns 0 when k < 0 or k > n; throws std::domain_error for n < 0.
BigInt binomial(const BigInt& n, const BigInt& k);

// x(x-1)(x-2)...(x-i+1), with the empty product equal to 1.
Rational falling_factorial(const Rational& x, unsigned i);

// base^exp mod modulus, canonical residue in [0, modulus).
// Any base sign is accepted; exp < 0 or modulus < 1 is a domain error.
BigInt mod_pow(const BigInt& base, const BigInt& exp, const BigInt& modulus);

// Exact integer power; pow_int(0, 0) == 1.
BigInt pow_int(const BigInt& base, unsigned exp);
Rational pow_rat(const Rational& base, unsigned exp);

// Representative of v mod m in [0, m); m >= 1 required.
BigInt mod_canonical(const BigInt& v, const BigInt& m);

// num/den normalized to lowest terms with a positive denominator; accepts any
// den sign, throws on den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

BigInt factorial(unsigned n);

bool is_integer(const Rational& r);

// Exact conversion; throws std::logic_error when r has a nontrivial denominator.
BigInt require_integer(const Rational& r, const char* context);

}  // namespace powersum
