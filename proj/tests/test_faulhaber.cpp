#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "powersum/faulhaber.hpp"
#include "powersum/power_sums.hpp"

using namespace powersum;

TEST_CASE("pinned polynomials") {
    const Polynomial s1 = faulhaber_polynomial(1);
    CHECK(s1.coeffs == std::vector<Rational>{0, Rational(1, 2), Rational(1, 2)});

    const Polynomial s3 = faulhaber_polynomial(3);
    CHECK(s3.coeffs ==
          std::vector<Rational>{0, 0, Rational(1, 4), Rational(1, 2), Rational(1, 4)});

    const Polynomial s7 = faulhaber_polynomial(7);
    CHECK(s7.degree() == 8);
    CHECK(evaluate_polynomial(s7, BigInt(10)) == Rational(sum_powers(10, 7)));
}

TEST_CASE("degree k+1 and zero constant term") {
    for (unsigned k = 0; k <= 20; ++k) {
        const Polynomial poly = faulhaber_polynomial(k);
        CHECK(poly.degree() == k + 1);
        CHECK(poly.coeff(0) == 0);
        CHECK(poly.coeffs.back() == Rational(1, k + 1));
    }
}

TEST_CASE("polynomials reproduce naive sums (sampled; full grid in acceptance)") {
    for (unsigned k = 0; k <= 20; ++k) {
        const Polynomial poly = faulhaber_polynomial(k);
        for (unsigned n : {1u, 2u, 3u, 10u, 100u}) {
            CAPTURE(k);
            CAPTURE(n);
            const Rational value = evaluate_polynomial(poly, BigInt(n));
            REQUIRE(is_integer(value));
            REQUIRE(value == Rational(oracles::plain_power_sum(n, k)));
        }
    }
}

TEST_CASE("both Bernoulli conventions build the identical polynomial") {
    for (unsigned k = 0; k <= 20; ++k) {
        CAPTURE(k);
        CHECK(faulhaber_polynomial(k, BernoulliConvention::SecondKind) ==
              faulhaber_polynomial(k, BernoulliConvention::FirstKind));
    }
}

TEST_CASE("triangular basis: pinned forms") {
    const Polynomial q1 = to_triangular_basis(faulhaber_polynomial(1));
    CHECK(q1.basis == PolyBasis::PowerOfT);
    CHECK(q1.coeffs == std::vector<Rational>{0, 1});
    CHECK(polynomial_to_string(q1) == "t");

    const Polynomial q3 = to_triangular_basis(faulhaber_polynomial(3));
    CHECK(q3.coeffs == std::vector<Rational>{0, 0, 1});
    CHECK(polynomial_to_string(q3) == "t^2");

    // S_5 in t: (4t^3 - t^2)/3.
    const Polynomial q5 = to_triangular_basis(faulhaber_polynomial(5));
    CHECK(q5.coeffs == std::vector<Rational>{0, 0, Rational(-1, 3), Rational(4, 3)});
}

TEST_CASE("triangular basis: q(T_n) = S_k(n) for odd k <= 15, n <= 100") {
    for (unsigned k = 1; k <= 15; k += 2) {
        const Polynomial q = to_triangular_basis(faulhaber_polynomial(k));
        for (unsigned n = 1; n <= 100; ++n) {
            const BigInt t = BigInt(n) * (n + 1) / 2;
            CAPTURE(k);
            CAPTURE(n);
            REQUIRE(evaluate_polynomial(q, t) == Rational(sum_powers(n, k)));
        }
    }
}

TEST_CASE("triangular basis: even k fails with a non-constant remainder") {
    for (unsigned k : {2u, 4u}) {
        CAPTURE(k);
        CHECK_THROWS_AS(to_triangular_basis(faulhaber_polynomial(k)), std::domain_error);
    }
    CHECK_THROWS_WITH_AS(to_triangular_basis(faulhaber_polynomial(2)),
                         doctest::Contains("non-constant remainder"), std::domain_error);
}

TEST_CASE("triangular basis rejects PowerOfT input") {
    Polynomial q = to_triangular_basis(faulhaber_polynomial(3));
    CHECK_THROWS_AS(to_triangular_basis(q), std::domain_error);
}

TEST_CASE("evaluation conventions") {
    CHECK(evaluate_polynomial(faulhaber_polynomial(0), BigInt(5)) == 5);
    CHECK(evaluate_polynomial(faulhaber_polynomial(4), BigInt(3)) == 98);  // 1+16+81
    const Polynomial zero;
    CHECK(evaluate_polynomial(zero, BigInt(123)) == 0);
    CHECK(zero.is_zero());
    CHECK(polynomial_to_string(zero) == "0");
}

TEST_CASE("string rendering") {
    CHECK(polynomial_to_string(faulhaber_polynomial(1)) == "1/2 n^2 + 1/2 n");
    const Polynomial q5 = to_triangular_basis(faulhaber_polynomial(5));
    CHECK(polynomial_to_string(q5) == "4/3 t^3 - 1/3 t^2");
}

TEST_CASE("canonical form drops trailing zeros") {
    Polynomial p;
    p.coeffs = {Rational(1), Rational(0), Rational(0)};
    p.canonicalize();
    CHECK(p.coeffs.size() == 1);
    CHECK(p.degree() == 0);
}
