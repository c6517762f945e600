#include "powersum/power_sums.hpp"

#include "powersum/special_numbers.hpp"

namespace powersum {

namespace {

void require_positive(const BigInt& n, const char* what) {
    if (n < 1) {
        throw std::domain_error(std::string(what) + " must be >= 1, got " + n.str());
    }
}

BigInt sum_powers_naive(const BigInt& n, unsigned k) {
    BigInt acc = 0;
    for (BigInt j = 1; j <= n; ++j) {
        acc += pow_int(j, k);
    }
    return acc;
}

// (1/(k+1)) sum_{l=0}^{k} C(k+1,l) B_l n^{k+1-l}, where FirstKind carries the
// extra (-1)^l and SecondKind none; the two agree term by term.
BigInt sum_powers_bernoulli(const BigInt& n, unsigned k, BernoulliConvention convention) {
    Rational acc = 0;
    for (unsigned l = 0; l <= k; ++l) {
        Rational b = bernoulli(l, convention);
        if (b == 0) {
            continue;
        }
        if (convention == BernoulliConvention::FirstKind && (l & 1u)) {
            b = -b;
        }
        acc += Rational(binomial(k + 1, l)) * b * Rational(pow_int(n, k + 1 - l));
    }
    acc /= Rational(k + 1);
    return require_integer(acc, "sum_powers(bernoulli)");
}

BigInt sum_powers_stirling_a(const BigInt& n, unsigned k) {
    Rational acc = 0;
    Rational falling = 1;
    for (unsigned i = 1; i <= k; ++i) {
        falling *= Rational(n - i + 1);
        acc += Rational(stirling2(k, i), i + 1) * falling;
    }
    acc *= Rational(n + 1);
    return require_integer(acc, "sum_powers(stirling-a)");
}

BigInt sum_powers_stirling_b(const BigInt& n, unsigned k) {
    Rational acc = 0;
    Rational falling = 1;
    for (unsigned i = 1; i <= k + 1; ++i) {
        falling *= Rational(n - i + 1);
        acc += Rational(stirling2(k + 1, i), i) * falling;
    }
    return require_integer(acc, "sum_powers(stirling-b)");
}

// sum_{j=1}^{k} j! {k brace j} C(n+1, j+1); integer arithmetic throughout.
BigInt sum_powers_hsu(const BigInt& n, unsigned k) {
    BigInt acc = 0;
    BigInt jfact = 1;
    for (unsigned j = 1; j <= k; ++j) {
        jfact *= j;
        acc += jfact * stirling2(k, j) * binomial(n + 1, BigInt(j) + 1);
    }
    return acc;
}

}  // namespace

std::string_view algorithm_name(SumAlgorithm algorithm) {
    switch (algorithm) {
        case SumAlgorithm::Naive: return "naive";
        case SumAlgorithm::BernoulliFirst: return "bernoulli1";
        case SumAlgorithm::BernoulliSecond: return "bernoulli2";
        case SumAlgorithm::StirlingA: return "stirling-a";
        case SumAlgorithm::StirlingB: return "stirling-b";
        case SumAlgorithm::Hsu: return "hsu";
    }
    return "unknown";
}

std::optional<SumAlgorithm> parse_algorithm(std::string_view name) {
    for (SumAlgorithm algorithm : kAllSumAlgorithms) {
        if (name == algorithm_name(algorithm)) {
            return algorithm;
        }
    }
    return std::nullopt;
}

BigInt sum_powers(const BigInt& n, unsigned k, SumAlgorithm algorithm) {
    require_positive(n, "sum_powers: n");
    switch (algorithm) {
        case SumAlgorithm::Naive:
            return sum_powers_naive(n, k);
        case SumAlgorithm::BernoulliFirst:
            return sum_powers_bernoulli(n, k, BernoulliConvention::FirstKind);
        case SumAlgorithm::BernoulliSecond:
            return sum_powers_bernoulli(n, k, BernoulliConvention::SecondKind);
        case SumAlgorithm::StirlingA:
        case SumAlgorithm::StirlingB:
        case SumAlgorithm::Hsu:
            break;
    }
    if (k == 0) {
        throw std::domain_error("sum_powers: Stirling/Hsu routes require k >= 1");
    }
    switch (algorithm) {
        case SumAlgorithm::StirlingA: return sum_powers_stirling_a(n, k);
        case SumAlgorithm::StirlingB: return sum_powers_stirling_b(n, k);
        default: return sum_powers_hsu(n, k);
    }
}

namespace {

unsigned checked_block_exponent(unsigned m, unsigned k) {
    if (static_cast<unsigned long long>(m) * k > 10000000ull) {
        throw std::domain_error("block exponent m*k exceeds the supported range (10^7)");
    }
    return m * k;
}

}  // namespace

BigInt block_sum(unsigned m, unsigned k) {
    if (m < 1 || k < 1) {
        throw std::domain_error("block_sum: m and k must be >= 1");
    }
    checked_block_exponent(m, k);
    const BigInt value = sum_powers(k, m * k, SumAlgorithm::Naive);
    const BigInt check = sum_powers(k, m * k, SumAlgorithm::Hsu);
    if (value != check) {
        throw std::logic_error("block_sum: naive and Hsu routes disagree for m=" +
                               std::to_string(m) + " k=" + std::to_string(k));
    }
    return value;
}

BigInt block_sum_prime(unsigned m, unsigned k) {
    return block_sum(m, k) - pow_int(k, m * k);
}

BigInt shifted_block_sum(const BigInt& n_start, unsigned m, unsigned k) {
    require_positive(n_start, "shifted_block_sum: n_start");
    if (m < 1 || k < 1) {
        throw std::domain_error("shifted_block_sum: m and k must be >= 1");
    }
    const unsigned exponent = checked_block_exponent(m, k);
    BigInt acc = 0;
    for (unsigned i = 0; i < k; ++i) {
        acc += pow_int(n_start + i, exponent);
    }
    return acc;
}

BigInt arith_prog_power_sum(const BigInt& a, const BigInt& d, unsigned k) {
    require_positive(a, "arith_prog_power_sum: a");
    require_positive(d, "arith_prog_power_sum: d");
    if (k < 1) {
        throw std::domain_error("arith_prog_power_sum: k must be >= 1");
    }
    BigInt acc = 0;
    for (unsigned i = 1; i <= k; ++i) {
        acc += pow_int(a + BigInt(i - 1) * d, k);
    }
    return acc;
}

BigInt shifted_sum(const BigInt& x, const BigInt& n, unsigned m) {
    if (x < 0) {
        throw std::domain_error("shifted_sum: x must be >= 0, got " + x.str());
    }
    require_positive(n, "shifted_sum: n");

    BigInt direct = 0;
    for (BigInt i = 1; i <= n; ++i) {
        direct += pow_int(x + i, m);
    }

    const BigInt upper = sum_powers(n + x, m, SumAlgorithm::BernoulliSecond);
    const BigInt lower = x == 0 ? BigInt(0) : sum_powers(x, m, SumAlgorithm::BernoulliSecond);
    if (upper - lower != direct) {
        throw std::logic_error("shifted_sum: prefix-difference and direct routes disagree");
    }
    return direct;
}

Rational cfz_rhs(const BigInt& x, const BigInt& n, unsigned k) {
    if (x < 0) {
        throw std::domain_error("cfz_rhs: x must be >= 0, got " + x.str());
    }
    require_positive(n, "cfz_rhs: n");
    if (k < 1) {
        throw std::domain_error("cfz_rhs: k must be >= 1");
    }

    const BigInt lambda = n * (n + 2 * x + 1);
    const Rational x_plus_half = Rational(2 * x + 1, 2);
    const Rational half(1, 2);

    Rational acc = 0;
    for (unsigned l = 1; l <= k; ++l) {
        Rational inner = 0;
        for (unsigned j = l; j <= k; ++j) {
            inner += Rational(binomial(2 * k, 2 * j)) * Rational(binomial(j, l)) *
                     pow_rat(x_plus_half, 2 * (j - l)) *
                     bernoulli_polynomial_at(2 * (k - j), half);
        }
        acc += Rational(pow_int(lambda, l), 2 * k) * inner;
    }
    return acc;
}

}  // namespace powersum
