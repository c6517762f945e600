#include "powersum/identities.hpp"

#include "powersum/divisibility.hpp"
#include "powersum/special_numbers.hpp"

namespace powersum {

BigInt gw_power_sum_rhs(const BigInt& x, const BigInt& y, unsigned n) {
    if (n < 1) {
        throw std::domain_error("gw_power_sum_rhs: n must be >= 1");
    }
    const BigInt s = x + y;
    const BigInt p = x * y;
    BigInt acc = 0;
    for (unsigned k = 0; k <= n / 2; ++k) {
        BigInt term = lucas_coeff(n, k) * pow_int(p, k) * pow_int(s, n - 2 * k);
        acc += (k & 1u) ? -term : term;
    }
    return acc;
}

BigInt gw_binet_rhs(const BigInt& x, const BigInt& y, unsigned n) {
    if (x == y) {
        throw std::domain_error("gw_binet_rhs: x and y must be distinct");
    }
    const BigInt s = x + y;
    const BigInt p = x * y;
    BigInt acc = 0;
    for (unsigned k = 0; k <= n / 2; ++k) {
        BigInt term = binomial(BigInt(n) - k, k) * pow_int(p, k) * pow_int(s, n - 2 * k);
        acc += (k & 1u) ? -term : term;
    }
    return acc;
}

std::pair<Rational, Rational> gw_general_binet_lhs_rhs(const BigInt& x, const BigInt& y,
                                                       const BigInt& a0, const BigInt& a1,
                                                       unsigned n) {
    if (x == y) {
        throw std::domain_error("gw_general_binet_lhs_rhs: x and y must be distinct");
    }
    if (n < 2) {
        throw std::domain_error("gw_general_binet_lhs_rhs: n must be >= 2");
    }

    const Rational lhs =
        make_rational((a1 - y * a0) * pow_int(x, n) - (a1 - x * a0) * pow_int(y, n), x - y);

    const BigInt s = x + y;
    const BigInt p = x * y;
    Rational rhs = Rational(a1 * pow_int(s, n - 1));
    for (unsigned j = 1; j <= n / 2; ++j) {
        Rational coeff = Rational(binomial(BigInt(n) - j - 1, BigInt(j) - 1), j);
        if (j & 1u) {
            coeff = -coeff;
        }
        coeff *= Rational(pow_int(p, j));
        // Split so the a1 part is skipped at n = 2j instead of forming s^{-1}.
        Rational bracket = Rational(BigInt(j) * a0 * pow_int(s, n - 2 * j));
        if (n - 2 * j > 0) {
            bracket += Rational(BigInt(n - 2 * j) * a1 * pow_int(s, n - 2 * j - 1));
        }
        rhs += coeff * bracket;
    }
    return {lhs, rhs};
}

BigInt gw_zero_sum_rhs(const BigInt& x, const BigInt& y, const BigInt& z, unsigned n) {
    if (x + y + z != 0) {
        throw std::domain_error("gw_zero_sum_rhs: requires x + y + z = 0");
    }
    if (n < 2) {
        throw std::domain_error("gw_zero_sum_rhs: n must be >= 2");
    }
    const BigInt p = x * y;
    BigInt acc = 0;
    for (unsigned k = 1; k <= n / 2; ++k) {
        BigInt term = lucas_coeff(n, k) * pow_int(z, n - 2 * k) * pow_int(p, k);
        acc += ((n - k) & 1u) ? -term : term;
    }
    return acc;
}

BigInt gw_zero_sum_lhs(const BigInt& x, const BigInt& y, const BigInt& z, unsigned n) {
    const BigInt zn = pow_int(z, n);
    return pow_int(x, n) + pow_int(y, n) + ((n & 1u) ? zn : -zn);
}

DivisibilityReport check_prop_pxy(const BigInt& x, const BigInt& y, const BigInt& p) {
    ReportParams params = {{"x", x}, {"y", y}, {"p", p}};
    if (x < 1 || y < 1) {
        return failed_precondition("prop-3.3", std::move(params), "requires x, y >= 1");
    }
    if (p < 3 || !is_prime(p)) {
        return failed_precondition("prop-3.3", std::move(params), "p must be a prime >= 3");
    }
    const BigInt modulus = p * x * y * (x + y);
    const BigInt residue = mod_canonical(
        mod_pow(x, p, modulus) + mod_pow(y, p, modulus) - mod_pow(x + y, p, modulus), modulus);
    return checked_report("prop-3.3", std::move(params), modulus, residue, 0);
}

}  // namespace powersum
