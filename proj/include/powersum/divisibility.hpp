#pragma once

#include <utility>
#include <vector>

#include "powersum/exact.hpp"
#include "powersum/report.hpp"

namespace powersum {

// Deterministic trial division; intended for the desk-scale inputs in scope.
bool is_prime(const BigInt& n);
std::vector<BigInt> distinct_prime_factors(BigInt n);

// sum_{j=1}^{n} j^k mod m, reduced eagerly term by term.
BigInt power_sum_mod(const BigInt& n, const BigInt& k, const BigInt& m);

// x^{mk} + y^{mk} == 0 mod k^2 for x + y = k odd >= 3, m odd >= 1.
DivisibilityReport check_mk_pair(const BigInt& x, const BigInt& y, const BigInt& m,
                                 const BigInt& k);

// S(m,k) and S'(m,k) == 0 mod k^2 for odd m, k.
DivisibilityReport check_block(const BigInt& m, const BigInt& k);

// sum_{j=1}^{p^t} j^{mp} == 0 mod p^{t+1} for prime p >= 3, odd m, t >= 1;
// cross-checked against the Stirling/Hsu restatement for small mp.
DivisibilityReport check_prime_power_block(const BigInt& m, const BigInt& p, const BigInt& t);

// S(m,k) == 2(-1)^{m/2} sum_{u+v=k, u<v} (uv)^{mk/2} mod k^2 for odd k, even m.
DivisibilityReport residue_even_m(const BigInt& m, const BigInt& k);

// S(2l, 3) == 2 mod 9.
DivisibilityReport check_s2l3(const BigInt& l);

// S((p-1)l, p) == p-1 mod p^2 for prime p >= 3.
DivisibilityReport check_euler_block(const BigInt& p, const BigInt& l);

// 2 sum_{u+v=p, 0<u<v} (-uv)^{p(p-1)/2} == p-1 mod p^2 for prime p >= 3.
DivisibilityReport check_cor49(const BigInt& p);

// Damianou-Schumer criterion, exactly as the paper states it:
// predicted = (every prime p | n has p-1 not dividing k);
// actual    = (S_k(n) == 0 mod n).
std::pair<bool, bool> ds_predicate(const BigInt& n, const BigInt& k);

// (p^alpha)^2 | S_k(p^alpha) when p-1 does not divide k-1 (odd k >= 3).
DivisibilityReport check_prime_power_square(const BigInt& p, const BigInt& alpha,
                                            const BigInt& k);

// (pq)^2 | d*S_k(pq) for distinct odd primes and k in the index set A, with
// the multiplier d = q exactly when k == 1 mod q-1 and k != q.
DivisibilityReport check_pq(const BigInt& p, const BigInt& q, const BigInt& k);

// n^2 | S_k(n) for odd n, k >= 3 with n | k.
DivisibilityReport check_k_mult_of_n(const BigInt& n, const BigInt& k);

// k^2 | S(a,d;k) for odd k with gcd(d,k) = 1.
DivisibilityReport check_arith_prog(const BigInt& a, const BigInt& d, const BigInt& k);

// p^2 | sum_{i=1}^{n} (x+i)^m for prime p >= 3, p | n, p | 2x+1. The paper
// claims all m >= 0; the computed residue decides holds, and m = 0 carries a
// cautionary note (the claim is not provable there).
DivisibilityReport check_shifted_prop(const BigInt& p, const BigInt& n, const BigInt& x,
                                      const BigInt& m);

// p | S_p(p) for prime p >= 3.
DivisibilityReport check_sp_p(const BigInt& p);

// Faulhaber-quotient integrality: S_k(n)/n^2 is a nonnegative integer under
// (i) n | k or (ii) n = p^alpha with p-1 not dividing k-1; evaluated through
// both Bernoulli-convention formulas and cross-checked by exact division.
DivisibilityReport check_integrality(const BigInt& n, const BigInt& k);

struct SearchResult {
    BigInt n;
    BigInt modulus;  // n^2
    unsigned k_lo = 0;
    unsigned k_hi = 0;
    bool odd_only = false;
    std::vector<unsigned> passing_k;  // strictly increasing
};

// All k in [k_lo, k_hi] (odd only if requested) with S_k(n) == 0 mod n^2,
// computed with modular arithmetic only. Result is a pure function of the
// query; jobs > 1 splits the k range into contiguous chunks that merge in
// index order, so the output is identical for any worker count.
SearchResult search_k(const BigInt& n, unsigned k_lo, unsigned k_hi, bool odd_only,
                      unsigned jobs = 1);

}  // namespace powersum
