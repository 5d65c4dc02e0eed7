#pragma once

#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"
#include "qseries.hpp"

// Building-block q-series: divisor-sum generating series, Euler's product
// and eta quotients, the quasimodular E2, the discriminant Delta, and the
// partition-number oracle.  Every builder takes the target order N and
// returns a series whose window ends exactly at O(q^N).

namespace extremal {

// Sum over n of sigma_r(n) q^n for 1 <= n < N (sigma_r(n) = sum of r-th
// powers of the divisors of n), built by a divisor sieve.  Valuation 1,
// window [1, N).
inline zseries sigma_series(unsigned r, exp_t N)
{
    if (N < 1)
        throw domain_error("sigma_series: N must be >= 1");
    std::vector<mpz_class> c(static_cast<std::size_t>(N));
    mpz_class dr;
    for (exp_t d = 1; d < N; ++d) {
        mpz_ui_pow_ui(dr.get_mpz_t(), static_cast<unsigned long>(d), r);
        for (exp_t m = d; m < N; m += d)
            c[static_cast<std::size_t>(m)] += dr;
    }
    return zseries(0, std::move(c), N);
}

// Euler's product phi(q) = prod_{n>=1} (1 - q^n) on [0, N), expanded by the
// pentagonal number theorem: phi(q) = sum_j (-1)^j q^{j(3j-1)/2} over all
// integers j.  Only O(sqrt N) terms are nonzero.
inline zseries euler_phi_series(exp_t N)
{
    if (N < 1)
        throw domain_error("euler_phi_series: N must be >= 1");
    std::vector<mpz_class> c(static_cast<std::size_t>(N));
    c[0] = 1;
    for (exp_t j = 1;; ++j) {
        const exp_t g1 = j * (3 * j - 1) / 2;
        const exp_t g2 = j * (3 * j + 1) / 2;
        if (g1 >= N)
            break;
        const int s = (j % 2 == 0) ? 1 : -1;
        c[static_cast<std::size_t>(g1)] = s;
        if (g2 < N)
            c[static_cast<std::size_t>(g2)] = s;
    }
    return zseries(0, std::move(c), N);
}

// Eta quotient prod_m eta(m*tau)^{e_m} for integer pairs (m, e_m), m >= 1,
// including the global prefactor q^{sum(m*e)/24}.  The prefactor exponent
// must be an integer; fractional-exponent quotients are unsupported.
// Window ends at O(q^N).
inline zseries eta_product(const std::vector<std::pair<long, long>>& factors,
                           exp_t N)
{
    long pref24 = 0;
    for (const auto& [m, e] : factors) {
        if (m < 1)
            throw domain_error("eta_product: scale must be >= 1");
        pref24 += m * e;
    }
    if (pref24 % 24 != 0)
        throw eta_product_error(
            "eta_product: prefactor exponent " + std::to_string(pref24) +
            "/24 is not an integer");
    const exp_t pref = pref24 / 24;
    const exp_t W = N - pref; // working window of the product part
    if (W < 1)
        throw domain_error("eta_product: window too small");

    zseries num = zseries::one();
    zseries den = zseries::one();
    for (const auto& [m, e] : factors) {
        if (e == 0)
            continue;
        // phi(q^m) on a window covering [0, W): the inflated order
        // m*(base_ord - 1) + 1 must reach W, hence the ceiling division.
        const exp_t base_ord = detail::ceil_div(W - 1, m) + 1;
        const zseries f = euler_phi_series(base_ord).inflated(m).truncated(W);
        if (e > 0)
            num = (num * f.pow(static_cast<unsigned long>(e))).truncated(W);
        else
            den = (den * f.pow(static_cast<unsigned long>(-e))).truncated(W);
    }
    zseries res = den.is_one_on_window() && den.is_exact()
                      ? num
                      : num * den.truncated(W).inverse();
    return res.truncated(W).shifted(pref);
}

// Delta = eta(tau)^24 = q - 24q^2 + 252q^3 - ...; window [1, N).
inline zseries delta_series(exp_t N)
{
    return eta_product({{1, 24}}, N);
}

// E2 = 1 - 24 sum sigma_1(n) q^n on [0, N).
inline zseries e2_series(exp_t N)
{
    if (N < 1)
        throw domain_error("e2_series: N must be >= 1");
    return zseries::one() - mpz_class(24) * sigma_series(1, N);
}

// Exact table of partition numbers p(0..N).
struct partition_table {
    std::vector<mpz_class> values;

    // p(n), with p(n) = 0 for n < 0 — the natural boundary convention.
    const mpz_class& at(exp_t n) const
    {
        static const mpz_class zero_(0);
        if (n < 0)
            return zero_;
        if (n >= static_cast<exp_t>(values.size()))
            throw domain_error("partition_table: index beyond table");
        return values[static_cast<std::size_t>(n)];
    }
};

// Partition numbers by Euler's pentagonal recurrence
//   p(n) = sum_{j>=1} (-1)^{j-1} [ p(n - j(3j-1)/2) + p(n - j(3j+1)/2) ].
// This is the designated exact oracle, deliberately independent of series
// inversion so the two can cross-check.
inline partition_table partition_numbers(exp_t N)
{
    if (N < 0)
        throw domain_error("partition_numbers: N must be >= 0");
    partition_table t;
    t.values.resize(static_cast<std::size_t>(N) + 1);
    t.values[0] = 1;
    for (exp_t n = 1; n <= N; ++n) {
        mpz_class acc(0);
        for (exp_t j = 1;; ++j) {
            const exp_t g1 = j * (3 * j - 1) / 2;
            if (g1 > n)
                break;
            const exp_t g2 = j * (3 * j + 1) / 2;
            if (j % 2 == 1) {
                acc += t.values[static_cast<std::size_t>(n - g1)];
                if (g2 <= n)
                    acc += t.values[static_cast<std::size_t>(n - g2)];
            } else {
                acc -= t.values[static_cast<std::size_t>(n - g1)];
                if (g2 <= n)
                    acc -= t.values[static_cast<std::size_t>(n - g2)];
            }
        }
        t.values[static_cast<std::size_t>(n)] = acc;
    }
    return t;
}

// prod_{n>=2} 1/(1-q^n) = 1 + q^2 + q^3 + 2q^4 + ... on [0, N): the
// generating series of partitions into parts >= 2.  Its q^m coefficient
// equals p(m) - p(m-1).
inline zseries restricted_partition_series(exp_t N)
{
    if (N < 1)
        throw domain_error("restricted_partition_series: N must be >= 1");
    // (1 - q) * prod_{n>=1} 1/(1-q^n)
    const zseries phi_inv = euler_phi_series(N).inverse();
    return (zseries::one() - zseries::monomial(1, 1)) * phi_inv;
}

} // namespace extremal
