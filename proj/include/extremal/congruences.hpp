#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "modular_functions.hpp"
#include "qseries.hpp"
#include "residue_series.hpp"
#include "series_core.hpp"

// Verification of the Ramanujan-type congruences of the extremal
// coefficients: for p <= 11 prime and k in {1,...,p-1} union {p+1},
//   w_k(pn) == 0 (mod m(p))   for every nonzero integer n,
// with m(2) = 2^11, m(3) = 3^5, m(5) = 5^2, m(7) = 7, m(11) = 11.
// Two independent instruments:
//   * verify_congruence  — scans w_k(pn) directly over a finite range
//     whose default length is the Sturm count k*p*(p+1);
//   * sturm_witness      — for p <= 5, builds the weight-12kp holomorphic
//     form Z_k(q) * Delta(p tau)^{kp} on Gamma_0(p), applies U(p), and
//     checks its first k*p*(p+1) coefficients mod m(p), which certifies
//     the full congruence.

namespace extremal {

inline std::uint64_t modulus_for(long p)
{
    switch (p) {
    case 2: return std::uint64_t{1} << 11;
    case 3: return 243; // 3^5
    case 5: return 25;  // 5^2
    case 7: return 7;
    case 11: return 11;
    default:
        throw domain_error("modulus_for: the congruences cover the primes "
                           "2, 3, 5, 7, 11 only");
    }
}

inline bool k_in_family(long p, long k)
{
    return (k >= 1 && k <= p - 1) || k == p + 1;
}

inline void require_family(long p, long k)
{
    modulus_for(p); // validates p
    if (!k_in_family(p, k))
        throw domain_error("congruence: k must lie in {1,...,p-1} or equal "
                           "p+1 for p=" + std::to_string(p));
}

inline exp_t sturm_count(long p, long k)
{
    return static_cast<exp_t>(k) * p * (p + 1);
}

struct congruence_report {
    long p = 0;
    long k = 0;
    std::uint64_t modulus = 0;
    exp_t n_max = 0;                // w_k(pn) checked for n in [n_min, n_max]
    long negative_terms_checked = 0;
    std::vector<exp_t> failures;    // exponents pn with w_k(pn) != 0 mod m

    bool pass() const { return failures.empty(); }
};

namespace detail {

inline congruence_report scan_multiples(long p, long k, exp_t n_max,
                                        const zseries& zk)
{
    congruence_report rep;
    rep.p = p;
    rep.k = k;
    rep.modulus = modulus_for(p);
    rep.n_max = n_max;

    const exp_t n_min = -(static_cast<exp_t>(k) / p);
    for (exp_t n = n_min; n <= n_max; ++n) {
        if (n == 0)
            continue;
        const mpz_class w = zk.coeff(p * n);
        if (n < 0)
            ++rep.negative_terms_checked;
        if (mpz_fdiv_ui(w.get_mpz_t(),
                        static_cast<unsigned long>(rep.modulus)) != 0)
            rep.failures.push_back(p * n);
    }
    return rep;
}

} // namespace detail

// Direct scan of w_k(pn) over all nonzero n with -k <= pn <= p*n_max.
// The default bound is the Sturm count k*p*(p+1).
inline congruence_report verify_congruence(long p, long k, exp_t n_max = -1)
{
    require_family(p, k);
    if (n_max < 0)
        n_max = sturm_count(p, k);
    if (n_max < 1)
        throw domain_error("verify_congruence: n_max must be >= 1");
    const zk_function z = zk_build(k, p * n_max + 1);
    return detail::scan_multiples(p, k, n_max, z.series);
}

// All members of the family for one prime, sharing a single basis ladder.
inline std::vector<congruence_report> verify_congruence_family(long p)
{
    modulus_for(p); // validates p
    const long k_top = p + 1;
    const exp_t n_top = sturm_count(p, k_top);
    const exp_t ladder_window = p * n_top + k_top; // J_m order >= p*n_top+1
    const faber_system sys = faber_and_jd(k_top, ladder_window);

    std::vector<congruence_report> out;
    for (long k = 1; k <= k_top; ++k) {
        if (!k_in_family(p, k))
            continue;
        const zk_function z = zk_from_system(k, sys);
        out.push_back(detail::scan_multiples(p, k, sturm_count(p, k),
                                             z.series));
    }
    return out;
}

struct sturm_report {
    long p = 0;
    long k = 0;
    std::uint64_t modulus = 0;
    long weight = 0;             // 12*k*p
    exp_t terms_required = 0;    // k*p*(p+1)
    exp_t first_exponent = 0;    // valuation of the U(p) image
    std::vector<exp_t> failures; // exponents of nonzero residues

    bool pass() const { return failures.empty(); }
};

// Sturm certificate for p in {2, 3, 5}.  A = Z_k(q) * Delta(p tau)^{kp} is
// a holomorphic form of weight 12kp on Gamma_0(p) with integer
// coefficients, and its U(p) image satisfies
//   A | U(p)  =  sum_n ( sum_r w_k(pr) d_{n-r} ) q^n,
// where Delta(tau)^{kp} = sum_j d_j q^j.  The r = 0 term contributes
// w_k(0) * Delta(tau)^{kp}; the congruence excludes n = 0 and w_k(0) =
// p_{>=2}(k) is nonzero for k >= 2, so the object that vanishes mod m(p)
// is the difference
//   B  :=  A | U(p)  -  w_k(0) * Delta(tau)^{kp},
// again a holomorphic weight-12kp form on Gamma_0(p).  Since d_{kp} = 1
// is a unit, B == 0 (mod m) is equivalent to w_k(pn) == 0 (mod m) for all
// nonzero n, and by Sturm's theorem (weight/12 times the index
// [SL_2 : Gamma_0(p)] = p + 1) it suffices that the first k*p*(p+1)
// coefficients of B vanish mod m.
inline sturm_report sturm_witness(long p, long k)
{
    require_family(p, k);
    if (p > 5)
        throw domain_error("sturm_witness: the prime-power certificate "
                           "applies to p in {2, 3, 5}");

    sturm_report rep;
    rep.p = p;
    rep.k = k;
    rep.modulus = modulus_for(p);
    rep.weight = 12 * static_cast<long>(k) * p;
    rep.terms_required = sturm_count(p, k);

    const exp_t t = rep.terms_required;
    const exp_t v = static_cast<exp_t>(k) * (p * p - 1); // valuation of A
    const exp_t n0 = detail::ceil_div(v, static_cast<exp_t>(p));
    const exp_t W = p * t + 1; // A through q^{pt} gives the image through q^t
    rep.first_exponent = n0;

    // Z_k mod m on a window wide enough that A reaches order W.
    const exp_t Nz = W - static_cast<exp_t>(k) * p * p;
    const zk_function z = zk_build(k, Nz);
    const residue_series zr = residue_series::reduce(z.series, rep.modulus);

    // Delta(p tau)^{kp} mod m with order >= W + k: a window [1, Nd) for
    // Delta gives the power order p*Nd + (kp-2)*p + 1 > W + k.
    const unsigned long e = static_cast<unsigned long>(k) * p;
    const exp_t Nd =
        detail::ceil_div(W + static_cast<exp_t>(k), static_cast<exp_t>(p)) +
        1;
    const residue_series dp =
        residue_series::reduce(delta_series(Nd), rep.modulus)
            .inflated(p)
            .pow(e);

    const residue_series a = (zr * dp).truncated(W);

    // w_k(0) * Delta(tau)^{kp} mod m, known through q^t.
    const exp_t Nd1 = std::max<exp_t>(2, t + 2 - static_cast<exp_t>(e));
    const residue_series d1 =
        residue_series::reduce(delta_series(Nd1), rep.modulus).pow(e);
    const residue_series w0 =
        residue_series::reduce(zseries::constant(z.series.coeff(0)),
                               rep.modulus);

    const residue_series b = a.u_image(p) - w0 * d1;
    for (exp_t m : b.nonzero_exponents(b.valuation()))
        if (m <= t)
            rep.failures.push_back(m);
    return rep;
}

} // namespace extremal
