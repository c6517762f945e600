#include "powersum/special_numbers.hpp"

#include <mutex>

namespace powersum {

namespace {

// Both caches grow on demand under their mutex and are never shrunk;
// a published entry is immutable, so returning copies is always consistent.
std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_first_kind = {Rational(1)};

std::mutex stirling_mutex;
std::vector<std::vector<BigInt>> stirling_rows = {{BigInt(1)}};

void grow_bernoulli(unsigned index) {
    while (bernoulli_first_kind.size() <= index) {
        // Defining recurrence: sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1,
        // solved for B_m.
        const unsigned m = static_cast<unsigned>(bernoulli_first_kind.size());
        Rational acc = 0;
        for (unsigned j = 0; j + 1 <= m; ++j) {
            acc += Rational(binomial(m + 1, j)) * bernoulli_first_kind[j];
        }
        bernoulli_first_kind.push_back(-acc / Rational(m + 1));
    }
}

void grow_stirling(unsigned n) {
    while (stirling_rows.size() <= n) {
        const auto& prev = stirling_rows.back();
        const unsigned row = static_cast<unsigned>(stirling_rows.size());
        std::vector<BigInt> next(row + 1);
        next[0] = 0;
        next[row] = 1;
        for (unsigned k = 1; k < row; ++k) {
            next[k] = BigInt(k) * prev[k] + prev[k - 1];
        }
        stirling_rows.push_back(std::move(next));
    }
}

}  // namespace

Rational bernoulli(unsigned index, BernoulliConvention convention) {
    std::scoped_lock lock(bernoulli_mutex);
    grow_bernoulli(index);
    Rational value = bernoulli_first_kind[index];
    if (index == 1 && convention == BernoulliConvention::SecondKind) {
        value = -value;
    }
    return value;
}

Rational bernoulli_polynomial_at(unsigned n, const Rational& x) {
    Rational acc = 0;
    for (unsigned k = 0; k <= n; ++k) {
        const Rational b = bernoulli(k, BernoulliConvention::FirstKind);
        if (b == 0) {
            continue;
        }
        acc += Rational(binomial(n, k)) * b * pow_rat(x, n - k);
    }
    return acc;
}

BigInt stirling2(unsigned n, unsigned k) {
    if (k > n) {
        return 0;
    }
    std::scoped_lock lock(stirling_mutex);
    grow_stirling(n);
    return stirling_rows[n][k];
}

std::vector<BigInt> stirling2_row(unsigned n) {
    std::scoped_lock lock(stirling_mutex);
    grow_stirling(n);
    return stirling_rows[n];
}

BigInt lucas_coeff(unsigned k, unsigned i) {
    if (k < 1 || i > k / 2) {
        throw std::domain_error("lucas_coeff: need k >= 1 and 0 <= i <= k/2, got k=" +
                                std::to_string(k) + " i=" + std::to_string(i));
    }
    return 2 * binomial(k - i, i) - binomial(BigInt(k) - i - 1, i);
}

}  // namespace powersum
