#include "powersum/divisibility.hpp"

#include <thread>

#include "powersum/power_sums.hpp"
#include "powersum/special_numbers.hpp"

namespace powersum {

namespace {

bool is_odd(const BigInt& v) { return (v & 1) != 0; }

bool divides(const BigInt& d, const BigInt& v) { return d != 0 && v % d == 0; }

// Desk-scale bound for values that become loop lengths or shift counts.
constexpr unsigned kScaleLimit = 1000000;

bool exceeds_scale(const BigInt& v) { return v > kScaleLimit; }

}  // namespace

bool is_prime(const BigInt& n) {
    if (n < 2) {
        return false;
    }
    if (n < 4) {
        return true;
    }
    if (!is_odd(n)) {
        return false;
    }
    for (BigInt d = 3; d * d <= n; d += 2) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

std::vector<BigInt> distinct_prime_factors(BigInt n) {
    std::vector<BigInt> factors;
    if (n < 0) {
        n = -n;
    }
    for (BigInt d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            factors.push_back(d);
            while (n % d == 0) {
                n /= d;
            }
        }
    }
    if (n > 1) {
        factors.push_back(n);
    }
    return factors;
}

BigInt power_sum_mod(const BigInt& n, const BigInt& k, const BigInt& m) {
    BigInt acc = 0;
    for (BigInt j = 1; j <= n; ++j) {
        acc += mod_pow(j, k, m);
        if (acc >= m) {
            acc -= m;
        }
    }
    return acc;
}

DivisibilityReport check_mk_pair(const BigInt& x, const BigInt& y, const BigInt& m,
                                 const BigInt& k) {
    ReportParams params = {{"x", x}, {"y", y}, {"m", m}, {"k", k}};
    if (x < 1 || y < 1 || x + y != k) {
        return failed_precondition("prop-4.4", std::move(params), "requires x, y >= 1 with x+y=k");
    }
    if (k < 3 || !is_odd(k)) {
        return failed_precondition("prop-4.4", std::move(params), "k must be odd and >= 3");
    }
    if (m < 1 || !is_odd(m)) {
        return failed_precondition("prop-4.4", std::move(params), "m must be odd and >= 1");
    }
    const BigInt modulus = k * k;
    const BigInt exponent = m * k;
    const BigInt residue =
        mod_canonical(mod_pow(x, exponent, modulus) + mod_pow(y, exponent, modulus), modulus);
    return checked_report("prop-4.4", std::move(params), modulus, residue, 0);
}

DivisibilityReport check_block(const BigInt& m, const BigInt& k) {
    ReportParams params = {{"m", m}, {"k", k}};
    if (m < 1 || k < 1 || !is_odd(m) || !is_odd(k)) {
        return failed_precondition("prop-4.5", std::move(params),
                                   "m and k must be odd positive (even m: see prop-4.6)");
    }
    const BigInt modulus = k * k;
    const BigInt full = power_sum_mod(k, m * k, modulus);
    const BigInt open = mod_canonical(full - mod_pow(k, m * k, modulus), modulus);
    if (open != full) {
        throw std::logic_error("check_block: S and S' residues differ, k^{mk} not 0 mod k^2");
    }
    return checked_report("prop-4.5", std::move(params), modulus, full, 0,
                          "S'(m,k) residue " + open.str());
}

DivisibilityReport check_prime_power_block(const BigInt& m, const BigInt& p, const BigInt& t) {
    ReportParams params = {{"m", m}, {"p", p}, {"t", t}};
    if (p < 3 || !is_prime(p)) {
        return failed_precondition("prop-4.3", std::move(params), "p must be a prime >= 3");
    }
    if (m < 1 || !is_odd(m)) {
        return failed_precondition("prop-4.3", std::move(params), "m must be odd and >= 1");
    }
    if (t < 1) {
        return failed_precondition("prop-4.3", std::move(params), "t must be >= 1");
    }
    if (t > 64 || exceeds_scale(pow_int(p, t.convert_to<unsigned>()))) {
        return failed_precondition("prop-4.3", std::move(params),
                                   "p^t exceeds the supported range (10^6)");
    }
    const unsigned t_u = t.convert_to<unsigned>();
    const BigInt n = pow_int(p, t_u);
    const BigInt modulus = pow_int(p, t_u + 1);
    const BigInt exponent = m * p;
    const BigInt residue = power_sum_mod(n, exponent, modulus);

    // Hsu restatement of the same sum; must reproduce the residue exactly.
    if (exponent <= 64 && n <= 2048) {
        const unsigned e = exponent.convert_to<unsigned>();
        BigInt hsu = 0;
        BigInt jfact = 1;
        for (unsigned j = 1; j <= e; ++j) {
            jfact *= j;
            hsu += jfact * stirling2(e, j) * binomial(n + 1, BigInt(j) + 1);
        }
        if (mod_canonical(hsu, modulus) != residue) {
            throw std::logic_error("check_prime_power_block: Stirling restatement disagrees");
        }
    }
    return checked_report("prop-4.3", std::move(params), modulus, residue, 0);
}

DivisibilityReport residue_even_m(const BigInt& m, const BigInt& k) {
    ReportParams params = {{"m", m}, {"k", k}};
    if (k < 3 || !is_odd(k)) {
        return failed_precondition("prop-4.6", std::move(params), "k must be odd and >= 3");
    }
    if (m < 2 || is_odd(m)) {
        return failed_precondition("prop-4.6", std::move(params), "m must be even and >= 2");
    }
    const BigInt modulus = k * k;
    const BigInt computed = power_sum_mod(k, m * k, modulus);

    const BigInt half_exponent = m * k / 2;
    BigInt pair_sum = 0;
    for (BigInt u = 1; 2 * u < k; ++u) {
        pair_sum += mod_pow(u * (k - u), half_exponent, modulus);
    }
    BigInt predicted = 2 * pair_sum;
    if (is_odd(m / 2)) {
        predicted = -predicted;
    }
    return checked_report("prop-4.6", std::move(params), modulus, computed,
                          mod_canonical(predicted, modulus));
}

DivisibilityReport check_s2l3(const BigInt& l) {
    ReportParams params = {{"l", l}};
    if (l < 1) {
        return failed_precondition("cor-4.7", std::move(params), "l must be >= 1");
    }
    const BigInt residue = power_sum_mod(3, 6 * l, 9);
    return checked_report("cor-4.7", std::move(params), 9, residue, 2);
}

DivisibilityReport check_euler_block(const BigInt& p, const BigInt& l) {
    ReportParams params = {{"p", p}, {"l", l}};
    if (p < 3 || !is_prime(p)) {
        return failed_precondition("prop-4.8", std::move(params), "p must be a prime >= 3");
    }
    if (l < 1) {
        return failed_precondition("prop-4.8", std::move(params), "l must be >= 1");
    }
    const BigInt modulus = p * p;
    const BigInt residue = power_sum_mod(p, (p - 1) * l * p, modulus);
    return checked_report("prop-4.8", std::move(params), modulus, residue, p - 1);
}

DivisibilityReport check_cor49(const BigInt& p) {
    ReportParams params = {{"p", p}};
    if (p < 3 || !is_prime(p)) {
        return failed_precondition("cor-4.9", std::move(params), "p must be a prime >= 3");
    }
    const BigInt modulus = p * p;
    const BigInt exponent = p * (p - 1) / 2;
    BigInt acc = 0;
    for (BigInt u = 1; 2 * u < p; ++u) {
        acc += mod_pow(-(u * (p - u)), exponent, modulus);
    }
    return checked_report("cor-4.9", std::move(params), modulus, mod_canonical(2 * acc, modulus),
                          p - 1);
}

std::pair<bool, bool> ds_predicate(const BigInt& n, const BigInt& k) {
    if (n < 1 || k < 1) {
        throw std::domain_error("ds_predicate: n and k must be >= 1");
    }
    bool predicted = true;
    for (const BigInt& p : distinct_prime_factors(n)) {
        if (divides(p - 1, k)) {
            predicted = false;
            break;
        }
    }
    const bool actual = power_sum_mod(n, k, n) == 0;
    return {predicted, actual};
}

DivisibilityReport check_prime_power_square(const BigInt& p, const BigInt& alpha,
                                            const BigInt& k) {
    ReportParams params = {{"p", p}, {"alpha", alpha}, {"k", k}};
    if (p < 3 || !is_prime(p)) {
        return failed_precondition("thm-4.12", std::move(params), "p must be a prime >= 3");
    }
    if (alpha < 1) {
        return failed_precondition("thm-4.12", std::move(params), "alpha must be >= 1");
    }
    if (k < 3 || !is_odd(k)) {
        return failed_precondition("thm-4.12", std::move(params), "k must be odd and >= 3");
    }
    if (divides(p - 1, k - 1)) {
        return failed_precondition("thm-4.12", std::move(params),
                                   "hypothesis (p-1) | (k-1): the theorem is silent here "
                                   "(vacuous for every odd k when p = 3)");
    }
    if (alpha > 64 || exceeds_scale(pow_int(p, alpha.convert_to<unsigned>()))) {
        return failed_precondition("thm-4.12", std::move(params),
                                   "p^alpha exceeds the supported range (10^6)");
    }
    const unsigned a = alpha.convert_to<unsigned>();
    const BigInt n = pow_int(p, a);
    const BigInt modulus = n * n;
    return checked_report("thm-4.12", std::move(params), modulus, power_sum_mod(n, k, modulus),
                          0);
}

DivisibilityReport check_pq(const BigInt& p, const BigInt& q, const BigInt& k) {
    ReportParams params = {{"p", p}, {"q", q}, {"k", k}};
    if (p < 3 || q < 3 || p == q || !is_prime(p) || !is_prime(q)) {
        return failed_precondition("thm-4.13", std::move(params),
                                   "p and q must be distinct odd primes");
    }
    if (k < 3 || !is_odd(k)) {
        return failed_precondition("thm-4.13", std::move(params), "k must be odd and >= 3");
    }
    const bool in_a = mod_canonical(k, p - 1) != mod_canonical(1, p - 1);
    if (!in_a) {
        return failed_precondition("thm-4.13", std::move(params),
                                   "k == 1 (mod p-1): k is outside A, no claim");
    }
    const bool in_b = mod_canonical(k, q - 1) == mod_canonical(1, q - 1);
    const BigInt d = (in_b && k != q) ? q : BigInt(1);
    params.emplace_back("d", d);

    const BigInt n = p * q;
    const BigInt modulus = n * n;
    const BigInt residue = mod_canonical(d * power_sum_mod(n, k, modulus), modulus);
    return checked_report("thm-4.13", std::move(params), modulus, residue, 0,
                          in_b ? "k in A∩B, multiplier applied" : "k in A\\B");
}

DivisibilityReport check_k_mult_of_n(const BigInt& n, const BigInt& k) {
    ReportParams params = {{"n", n}, {"k", k}};
    if (n < 1 || !is_odd(n) || k < 3 || !is_odd(k)) {
        return failed_precondition("prop-4.10", std::move(params),
                                   "n and k must be odd with k >= 3");
    }
    if (!divides(n, k)) {
        return failed_precondition("prop-4.10", std::move(params), "requires n | k");
    }
    const BigInt modulus = n * n;
    return checked_report("prop-4.10", std::move(params), modulus, power_sum_mod(n, k, modulus),
                          0);
}

DivisibilityReport check_arith_prog(const BigInt& a, const BigInt& d, const BigInt& k) {
    ReportParams params = {{"a", a}, {"d", d}, {"k", k}};
    if (a < 1 || d < 1 || k < 1) {
        return failed_precondition("thm-3.1(ap)", std::move(params), "a, d, k must be >= 1");
    }
    if (!is_odd(k)) {
        return failed_precondition("thm-3.1(ap)", std::move(params), "k must be odd");
    }
    if (boost::multiprecision::gcd(d, k) != 1) {
        return failed_precondition("thm-3.1(ap)", std::move(params), "requires gcd(d, k) = 1");
    }
    const BigInt modulus = k * k;
    BigInt acc = 0;
    for (BigInt i = 1; i <= k; ++i) {
        acc += mod_pow(a + (i - 1) * d, k, modulus);
        if (acc >= modulus) {
            acc -= modulus;
        }
    }
    return checked_report("thm-3.1(ap)", std::move(params), modulus, acc, 0);
}

DivisibilityReport check_shifted_prop(const BigInt& p, const BigInt& n, const BigInt& x,
                                      const BigInt& m) {
    ReportParams params = {{"p", p}, {"n", n}, {"x", x}, {"m", m}};
    if (p < 3 || !is_prime(p)) {
        return failed_precondition("prop-3.2", std::move(params), "p must be a prime >= 3");
    }
    if (n < 1 || !divides(p, n)) {
        return failed_precondition("prop-3.2", std::move(params), "requires p | n, n >= 1");
    }
    if (x < 1 || !divides(p, 2 * x + 1)) {
        return failed_precondition("prop-3.2", std::move(params), "requires x >= 1 with p | 2x+1");
    }
    if (m < 0) {
        return failed_precondition("prop-3.2", std::move(params), "m must be >= 0");
    }
    const BigInt modulus = p * p;
    BigInt acc = 0;
    for (BigInt i = 1; i <= n; ++i) {
        acc += mod_pow(x + i, m, modulus);
        if (acc >= modulus) {
            acc -= modulus;
        }
    }
    std::string note;
    if (m == 0) {
        note = "m=0: the sum is n, and p^2 | n does not follow from the hypotheses";
    }
    return checked_report("prop-3.2", std::move(params), modulus, acc, 0, std::move(note));
}

DivisibilityReport check_sp_p(const BigInt& p) {
    ReportParams params = {{"p", p}};
    if (p < 3 || !is_prime(p)) {
        return failed_precondition("cor-5.2", std::move(params), "p must be a prime >= 3");
    }
    return checked_report("cor-5.2", std::move(params), p, power_sum_mod(p, p, p), 0);
}

DivisibilityReport check_integrality(const BigInt& n, const BigInt& k) {
    ReportParams params = {{"n", n}, {"k", k}};
    if (n < 3 || k < 3 || !is_odd(n) || !is_odd(k)) {
        return failed_precondition("cor-4.13", std::move(params),
                                   "n and k must be odd and >= 3");
    }
    bool in_hypothesis = divides(n, k);
    if (!in_hypothesis) {
        const auto primes = distinct_prime_factors(n);
        in_hypothesis = primes.size() == 1 && !divides(primes.front() - 1, k - 1);
    }
    if (!in_hypothesis) {
        return failed_precondition("cor-4.13", std::move(params),
                                   "requires n | k, or n = p^alpha with (p-1) not | (k-1)");
    }
    if (exceeds_scale(n) || exceeds_scale(k)) {
        return failed_precondition("cor-4.13", std::move(params),
                                   "n and k must lie in the supported range (10^6)");
    }

    // Both convention variants of the Faulhaber quotient S_k(n)/n^2. The l = k
    // term would carry n^{-1}, but B_k = 0 for odd k >= 3, so it never arises.
    const unsigned ku = k.convert_to<unsigned>();
    Rational first = 0;
    Rational second = 0;
    for (unsigned l = 0; l <= ku; ++l) {
        const Rational b = bernoulli(l, BernoulliConvention::FirstKind);
        if (b == 0) {
            continue;
        }
        const Rational common = Rational(binomial(k + 1, l)) * Rational(pow_int(n, ku - l - 1));
        first += common * ((l & 1u) ? -b : b);
        second += common * ((l == 1) ? -b : b);
    }
    first /= Rational(k + 1);
    second /= Rational(k + 1);
    if (first != second) {
        throw std::logic_error("check_integrality: the two Bernoulli conventions disagree");
    }

    const BigInt modulus = n * n;
    const BigInt exact = sum_powers(n, ku, SumAlgorithm::Naive);
    if (first != Rational(exact, modulus)) {
        throw std::logic_error("check_integrality: formula value differs from S_k(n)/n^2");
    }
    std::string note = is_integer(first)
                           ? "quotient " + boost::multiprecision::numerator(first).str()
                           : "non-integer quotient";
    return checked_report("cor-4.13", std::move(params), modulus, mod_canonical(exact, modulus),
                          0, std::move(note));
}

SearchResult search_k(const BigInt& n, unsigned k_lo, unsigned k_hi, bool odd_only,
                      unsigned jobs) {
    if (n < 1 || k_lo < 1 || k_lo > k_hi) {
        throw std::domain_error("search_k: need n >= 1 and 1 <= k_lo <= k_hi");
    }
    SearchResult result;
    result.n = n;
    result.modulus = n * n;
    result.k_lo = k_lo;
    result.k_hi = k_hi;
    result.odd_only = odd_only;

    std::vector<unsigned> candidates;
    for (unsigned k = k_lo; k <= k_hi; ++k) {
        if (!odd_only || (k & 1u)) {
            candidates.push_back(k);
        }
    }
    if (candidates.empty()) {
        return result;
    }

    const unsigned workers =
        std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(candidates.size())));
    std::vector<std::vector<unsigned>> chunks(workers);
    const std::size_t per = (candidates.size() + workers - 1) / workers;

    auto run_chunk = [&](unsigned w, std::vector<unsigned>& out) {
        const std::size_t begin = w * per;
        const std::size_t end = std::min(candidates.size(), begin + per);
        for (std::size_t i = begin; i < end; ++i) {
            if (power_sum_mod(n, candidates[i], result.modulus) == 0) {
                out.push_back(candidates[i]);
            }
        }
    };

    if (workers == 1) {
        run_chunk(0, chunks[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(run_chunk, w, std::ref(chunks[w]));
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    for (const auto& chunk : chunks) {
        result.passing_k.insert(result.passing_k.end(), chunk.begin(), chunk.end());
    }
    return result;
}

}  // namespace powersum
