#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "powersum/exact.hpp"

namespace powersum {

// Independent evaluation routes for S_k(n) = 1^k + ... + n^k. Naive is the
// designated oracle; every formula route must reproduce it exactly.
enum class SumAlgorithm { Naive, BernoulliFirst, BernoulliSecond, StirlingA, StirlingB, Hsu };

inline constexpr std::array<SumAlgorithm, 6> kAllSumAlgorithms = {
    SumAlgorithm::Naive,       SumAlgorithm::BernoulliFirst, SumAlgorithm::BernoulliSecond,
    SumAlgorithm::StirlingA,   SumAlgorithm::StirlingB,      SumAlgorithm::Hsu,
};

std::string_view algorithm_name(SumAlgorithm algorithm);
std::optional<SumAlgorithm> parse_algorithm(std::string_view name);

// S_k(n) for n >= 1, k >= 0 (k >= 1 for the Stirling/Hsu routes). Formula
// routes carry exact rational intermediates and assert integrality of the
// final value; a non-integer result is an internal-consistency error.
BigInt sum_powers(const BigInt& n, unsigned k, SumAlgorithm algorithm = SumAlgorithm::Naive);

// S(m,k) = 1^{mk} + 2^{mk} + ... + k^{mk}, cross-checked against a formula route.
BigInt block_sum(unsigned m, unsigned k);

// S'(m,k) = S(m,k) - k^{mk}.
BigInt block_sum_prime(unsigned m, unsigned k);

// n_start^{mk} + (n_start+1)^{mk} + ... + (n_start+k-1)^{mk}, n_start >= 1.
BigInt shifted_block_sum(const BigInt& n_start, unsigned m, unsigned k);

// S(a,d;k) = sum_{i=1}^{k} (a + (i-1)d)^k, a, d >= 1.
BigInt arith_prog_power_sum(const BigInt& a, const BigInt& d, unsigned k);

// sum_{i=1}^{n} (x+i)^m for x >= 0, evaluated both as a prefix-sum difference
// and by direct summation; the two routes must agree.
BigInt shifted_sum(const BigInt& x, const BigInt& n, unsigned m);

// Right-hand side of the lambda-expansion of sum_{l=1}^{n} (x+l)^{2k-1} in
// powers of lambda = n(n+2x+1); equals shifted_sum(x, n, 2k-1) exactly.
Rational cfz_rhs(const BigInt& x, const BigInt& n, unsigned k);

}  // namespace powersum
