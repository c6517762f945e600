#include "powersum/exact.hpp"

#include <boost/multiprecision/integer.hpp>

namespace powersum {

BigInt binomial(const BigInt& n, const BigInt& k) {
    if (n < 0) {
        throw std::domain_error("binomial: n must be nonnegative, got " + n.str());
    }
    if (k < 0 || k > n) {
        return 0;
    }
    BigInt kk = k;
    if (n - k < kk) {
        kk = n - k;
    }
    // Multiplicative form; every partial quotient is exact.
    BigInt result = 1;
    for (BigInt i = 1; i <= kk; ++i) {
        result *= n - kk + i;
        result /= i;
    }
    return result;
}

Rational falling_factorial(const Rational& x, unsigned i) {
    Rational result = 1;
    Rational term = x;
    for (unsigned j = 0; j < i; ++j) {
        result *= term;
        term -= 1;
    }
    return result;
}

BigInt mod_canonical(const BigInt& v, const BigInt& m) {
    if (m < 1) {
        throw std::domain_error("mod_canonical: modulus must be >= 1, got " + m.str());
    }
    BigInt r = v % m;
    if (r < 0) {
        r += m;
    }
    return r;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw std::domain_error("make_rational: zero denominator");
    }
    if (den < 0) {
        return Rational(-num, -den);
    }
    return Rational(num, den);
}

BigInt mod_pow(const BigInt& base, const BigInt& exp, const BigInt& modulus) {
    if (modulus < 1) {
        throw std::domain_error("mod_pow: modulus must be >= 1, got " + modulus.str());
    }
    if (exp < 0) {
        throw std::domain_error("mod_pow: exponent must be >= 0, got " + exp.str());
    }
    return boost::multiprecision::powm(mod_canonical(base, modulus), exp, modulus);
}

BigInt pow_int(const BigInt& base, unsigned exp) {
    if (exp == 0) {
        return 1;
    }
    return boost::multiprecision::pow(base, exp);
}

Rational pow_rat(const Rational& base, unsigned exp) {
    Rational result = 1;
    Rational b = base;
    unsigned e = exp;
    while (e > 0) {
        if (e & 1u) {
            result *= b;
        }
        e >>= 1u;
        if (e > 0) {
            b *= b;
        }
    }
    return result;
}

BigInt factorial(unsigned n) {
    BigInt result = 1;
    for (unsigned i = 2; i <= n; ++i) {
        result *= i;
    }
    return result;
}

bool is_integer(const Rational& r) {
    return boost::multiprecision::denominator(r) == 1;
}

BigInt require_integer(const Rational& r, const char* context) {
    if (!is_integer(r)) {
        throw std::logic_error(std::string(context) + ": expected an integer, got " +
                               boost::multiprecision::numerator(r).str() + "/" +
                               boost::multiprecision::denominator(r).str());
    }
    return boost::multiprecision::numerator(r);
}

}  // namespace powersum
