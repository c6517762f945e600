#pragma once

#include <string>
#include <vector>

#include "powersum/exact.hpp"
#include "powersum/special_numbers.hpp"

namespace powersum {

enum class PolyBasis { PowerOfN, PowerOfT };

// Dense polynomial over exact rationals in one indeterminate: n, or the
// triangular number t = n(n+1)/2. Canonical form has no trailing zero
// coefficient; the zero polynomial has an empty coefficient vector.
struct Polynomial {
    PolyBasis basis = PolyBasis::PowerOfN;
    std::vector<Rational> coeffs;  // index = degree

    bool is_zero() const { return coeffs.empty(); }
    // Degree of the zero polynomial is reported as 0.
    unsigned degree() const { return coeffs.empty() ? 0 : static_cast<unsigned>(coeffs.size()) - 1; }
    const Rational& coeff(unsigned degree_index) const;
    void canonicalize();

    friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

// The Faulhaber polynomial of S_k: degree k+1, zero constant term. The two
// Bernoulli conventions are distinct routes to the identical polynomial.
Polynomial faulhaber_polynomial(unsigned k,
                                BernoulliConvention convention = BernoulliConvention::SecondKind);

// Rewrite a PowerOfN polynomial in powers of t = n(n+1)/2 by repeated exact
// division by (n^2+n)/2. Each remainder must be a constant; a degree-1
// remainder (any even-k Faulhaber input) raises std::domain_error.
Polynomial to_triangular_basis(const Polynomial& poly);

// Horner evaluation; the argument is a value of the polynomial's basis
// variable (n, or t).
Rational evaluate_polynomial(const Polynomial& poly, const BigInt& arg);
Rational evaluate_polynomial(const Polynomial& poly, const Rational& arg);

// Human-readable form, e.g. "1/2 n^2 + 1/2 n" or "t^2".
std::string polynomial_to_string(const Polynomial& poly);

}  // namespace powersum
