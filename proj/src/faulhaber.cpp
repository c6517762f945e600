#include "powersum/faulhaber.hpp"

#include <sstream>

namespace powersum {

namespace {

const Rational kZero = 0;

// Exact division with remainder by the fixed quadratic (n^2 + n)/2.
// Returns {quotient, remainder} with deg(remainder) <= 1.
std::pair<Polynomial, Polynomial> divide_by_triangular(const Polynomial& poly) {
    Polynomial remainder = poly;
    Polynomial quotient;
    if (poly.coeffs.size() < 3) {
        return {quotient, remainder};
    }
    quotient.coeffs.assign(poly.coeffs.size() - 2, Rational(0));
    const Rational lead(1, 2);  // coefficient of n^2 in (n^2+n)/2
    for (std::size_t d = remainder.coeffs.size(); d-- >= 3;) {
        Rational factor = remainder.coeffs[d] / lead;
        if (factor == 0) {
            continue;
        }
        quotient.coeffs[d - 2] = factor;
        remainder.coeffs[d] = 0;
        remainder.coeffs[d - 1] -= factor * Rational(1, 2);
    }
    remainder.coeffs.resize(2);
    quotient.canonicalize();
    remainder.canonicalize();
    return {quotient, remainder};
}

}  // namespace

const Rational& Polynomial::coeff(unsigned degree_index) const {
    if (degree_index >= coeffs.size()) {
        return kZero;
    }
    return coeffs[degree_index];
}

void Polynomial::canonicalize() {
    while (!coeffs.empty() && coeffs.back() == 0) {
        coeffs.pop_back();
    }
}

Polynomial faulhaber_polynomial(unsigned k, BernoulliConvention convention) {
    Polynomial poly;
    poly.basis = PolyBasis::PowerOfN;
    poly.coeffs.assign(k + 2, Rational(0));
    for (unsigned l = 0; l <= k; ++l) {
        Rational b = bernoulli(l, convention);
        if (b == 0) {
            continue;
        }
        if (convention == BernoulliConvention::FirstKind && (l & 1u)) {
            b = -b;
        }
        poly.coeffs[k + 1 - l] = Rational(binomial(k + 1, l)) * b / Rational(k + 1);
    }
    poly.canonicalize();
    return poly;
}

Polynomial to_triangular_basis(const Polynomial& poly) {
    if (poly.basis != PolyBasis::PowerOfN) {
        throw std::domain_error("to_triangular_basis: input must be in the power-of-n basis");
    }
    Polynomial result;
    result.basis = PolyBasis::PowerOfT;
    Polynomial current = poly;
    while (!current.is_zero()) {
        auto [quotient, remainder] = divide_by_triangular(current);
        if (remainder.degree() > 0) {
            throw std::domain_error(
                "to_triangular_basis: non-constant remainder " +
                polynomial_to_string(remainder) +
                " (the polynomial is not a polynomial in n(n+1)/2)");
        }
        result.coeffs.push_back(remainder.is_zero() ? Rational(0) : remainder.coeffs[0]);
        current = std::move(quotient);
    }
    result.canonicalize();
    return result;
}

Rational evaluate_polynomial(const Polynomial& poly, const Rational& arg) {
    Rational acc = 0;
    for (std::size_t d = poly.coeffs.size(); d-- > 0;) {
        acc = acc * arg + poly.coeffs[d];
    }
    return acc;
}

Rational evaluate_polynomial(const Polynomial& poly, const BigInt& arg) {
    return evaluate_polynomial(poly, Rational(arg));
}

std::string polynomial_to_string(const Polynomial& poly) {
    if (poly.is_zero()) {
        return "0";
    }
    const char* var = poly.basis == PolyBasis::PowerOfN ? "n" : "t";
    std::ostringstream out;
    bool first = true;
    for (std::size_t d = poly.coeffs.size(); d-- > 0;) {
        const Rational& c = poly.coeffs[d];
        if (c == 0) {
            continue;
        }
        const bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) {
                out << "-";
            }
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        const bool unit = mag == 1;
        if (!unit || d == 0) {
            out << boost::multiprecision::numerator(mag).str();
            if (boost::multiprecision::denominator(mag) != 1) {
                out << "/" << boost::multiprecision::denominator(mag).str();
            }
            if (d > 0) {
                out << " ";
            }
        }
        if (d == 1) {
            out << var;
        } else if (d > 1) {
            out << var << "^" << d;
        }
    }
    return out.str();
}

}  // namespace powersum
