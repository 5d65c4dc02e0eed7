#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <mpfr.h>

#include "bigfloat.hpp"
#include "errors.hpp"
#include "modular_functions.hpp"
#include "quadforms.hpp"
#include "qseries.hpp"
#include "rademacher.hpp"
#include "series_core.hpp"

// The singular-moduli route to the partition numbers:
//
//   G  = (1/2) (E2(t) - 2 E2(2t) - 3 E2(3t) + 6 E2(6t))
//            / (eta(t) eta(2t) eta(3t) eta(6t))^2,
//   P(tau) = (i/2pi) dG/dtau - G(tau)/(2 pi Im tau)
//          = - sum_m g(m) (m + 1/(2 pi y)) q^m,          q = e^{2 pi i tau},
//
// evaluated at the CM points tau_Q = (-b + i sqrt|D|)/(2a) of the marked
// forms of discriminant D = 1 - 24n.  The trace over one representative
// per class equals (24n-1) p(n) exactly; we compute it numerically with
// certified rounding.

namespace extremal {

// q-expansion of G: integer coefficients, window [-1, N), leading term
// q^{-1}.  The halving of the Eisenstein combination is exact; a stray odd
// coefficient would mean the builder is broken, not a data problem.
inline zseries g_series(exp_t N)
{
    if (N < 2)
        throw domain_error("g_series: N must be >= 2");
    const exp_t W = N + 2;
    const zseries e2 = e2_series(W);
    zseries combo = e2;
    combo -= mpz_class(2) * e2.inflated(2).truncated(W);
    combo -= mpz_class(3) * e2.inflated(3).truncated(W);
    combo += mpz_class(6) * e2.inflated(6).truncated(W);

    std::vector<mpz_class> half;
    half.reserve(static_cast<std::size_t>(combo.stored_end() -
                                          combo.valuation()));
    for (exp_t m = combo.valuation(); m < combo.stored_end(); ++m) {
        mpz_class c = combo.coeff(m);
        if (mpz_odd_p(c.get_mpz_t()))
            throw verification_error("g_series: Eisenstein combination has "
                                     "an odd coefficient");
        half.push_back(c / 2);
    }
    const zseries num(combo.valuation(), std::move(half), combo.order());

    const zseries den =
        eta_product({{1, 2}, {2, 2}, {3, 2}, {6, 2}}, W);
    return (num * den.inverse()).truncated(N);
}

namespace detail {

// Terms needed so that the tail of sum g(m) e^{-2 pi m y} (coefficients
// growing like e^{4 pi sqrt m}) drops below 2^-B: solve
// 2 pi y s^2 - 4 pi s = B ln 2 for s = sqrt(M).
inline exp_t term_schedule(double y, double B)
{
    const double s =
        (1.0 + std::sqrt(1.0 + y * B * std::log(2.0) / (2.0 * M_PI))) / y;
    return static_cast<exp_t>(std::ceil(s * s)) + 8;
}

// Largest intermediate term of the P series is ~ e^{2 pi / y} (at
// m ~ 1/y^2), which the working precision must absorb on top of the
// target accuracy.
inline long peak_bits(double y)
{
    return static_cast<long>(
               std::ceil(2.0 * M_PI / (y * std::log(2.0)))) +
           4;
}

} // namespace detail

// P(tau_Q) for the CM point of [a, b, c], using every term of g's window.
// The angle of each q^m is reduced exactly (integers only) before any
// rounding, and the |q|-powers walk an iterative ladder, so the value is
// bit-deterministic for a given window and precision.
inline big_complex evaluate_P(const zseries& g, const heegner_form& f,
                              mpfr_prec_t prec)
{
    // Any positive-definite form gives a CM point in the upper half
    // plane; membership in the marked family is enumerate_forms'
    // business, not a prerequisite of the evaluation itself (and the
    // conjugated form [a, -b, c], needed for symmetry checks, is
    // deliberately admitted).
    if (f.a <= 0 || f.discriminant() >= 0)
        throw domain_error("evaluate_P: form is not positive definite");
    if (g.valuation() > -1)
        throw domain_error("evaluate_P: G window must start at q^{-1}");

    const long D = f.discriminant();
    const big_real y =
        big_real(static_cast<long>(-D), prec).sqrt().div_si(2 * f.a);
    const big_real two_pi = big_real::pi(prec).mul_si(2);
    const big_real inv2piy = big_real(1L, prec) / (two_pi * y);
    const big_real E = (-(two_pi * y)).exp(); // |q| = e^{-2 pi y}

    // |q|^m ladder, seeded at the window's first exponent.
    big_real qabs =
        (-(two_pi * y).mul_si(static_cast<long>(g.valuation()))).exp();
    big_complex acc(prec);
    for (exp_t m = g.valuation(); m < g.order(); ++m) {
        const mpz_class gm = g.coeff(m);
        if (sgn(gm) != 0) {
            // e^{2 pi i m x} with x = -b/(2a).
            const big_complex phase = detail::unit_exp(
                -m * static_cast<long long>(f.b), 2LL * f.a, prec);
            const big_real mag =
                (big_real(static_cast<long>(m), prec) + inv2piy) * qabs;
            acc += phase.scaled(mag.mul_z(gm));
        }
        qabs = qabs * E;
    }
    return big_complex(-acc.re, -acc.im);
}

struct trace_result {
    long n = 0;
    long disc = 0;                   // 1 - 24n
    std::vector<heegner_form> forms; // one representative per class
    std::string trace;               // decimal rendering of the real part
    double trace_margin = 0;         // |trace - nearest integer|
    double im_abs = 0;               // |imaginary part of the trace|
    mpz_class trace_int;             // nearest integer, gated
    mpz_class p_value;               // trace_int / (24n - 1), exact

    long class_count() const { return static_cast<long>(forms.size()); }
};

// Tr(P; n) over the marked classes of discriminant 1 - 24n, rounded and
// certified: the trace must sit within 2^-32 of an integer (and its
// imaginary part below 2^-32), and that integer must be divisible by
// 24n - 1.  The quotient is p(n).
inline trace_result trace_P(long n, mpfr_prec_t prec = 0)
{
    if (n < 1)
        throw domain_error("trace_P: n must be >= 1");
    trace_result res;
    res.n = n;
    res.disc = 1 - 24 * n;
    res.forms = enumerate_forms(n);

    long a_max = 0;
    for (const heegner_form& f : res.forms)
        a_max = std::max(a_max, f.a);
    const double y_min =
        std::sqrt(static_cast<double>(-res.disc)) / (2.0 * a_max);

    // Accuracy target: the trace is the integer (24n-1) p(n); aim 64 bits
    // past its size, then pad the working precision by the peak term.
    const double p_est =
        std::exp(M_PI * std::sqrt(2.0 * n / 3.0)) /
        (4.0 * n * std::sqrt(3.0));
    const double target_bits =
        64.0 + std::log2((24.0 * n - 1) * p_est + 2.0) + 32.0;
    if (prec <= 0)
        prec = static_cast<mpfr_prec_t>(target_bits) +
               detail::peak_bits(y_min) + 32;

    const exp_t M = detail::term_schedule(y_min, target_bits);
    const zseries g = g_series(M);

    big_complex tr(prec);
    for (const heegner_form& f : res.forms)
        tr += evaluate_P(g, f, prec);

    res.trace = tr.re.str(30);
    res.trace_margin = tr.re.dist_to_int().to_double();
    res.im_abs = tr.im.abs().to_double();
    res.trace_int = tr.re.round_to_int();

    if (!tr.im.abs_less_2exp(-32))
        throw inconclusive_error("trace_P: imaginary part of the trace "
                                 "failed to cancel below 2^-32");
    if (!tr.re.dist_to_int().abs_less_2exp(-32))
        throw inconclusive_error("trace_P: trace is not within 2^-32 of an "
                                 "integer");
    const mpz_class den(24 * n - 1);
    if (!mpz_divisible_p(res.trace_int.get_mpz_t(), den.get_mpz_t()))
        throw verification_error("trace_P: rounded trace is not divisible "
                                 "by 24n - 1");
    res.p_value = res.trace_int / den;
    return res;
}

// The blended identity: assemble the q-expansion of
//   Tr(P;k)/(24k-1) + (R_k - R_{k-1})
//     + sum_{n=1}^{k-1} Tr(P;n)/(24n-1) (R_{k-n} - R_{k-n-1})
// on the exponent range [-k, n_hi], with every trace and every Rademacher
// coefficient individually rounded through its certification gate.  The
// result is an integer q-series directly comparable with the exact Z_k.
inline zseries corollary2_assemble(long k, exp_t n_hi)
{
    if (k < 1)
        throw domain_error("corollary2_assemble: k must be >= 1");
    if (n_hi < 1)
        throw domain_error("corollary2_assemble: n_hi must be >= 1");

    // alpha_0 = 1; alpha_n = Tr(P;n)/(24n-1) for n >= 1.
    std::vector<mpz_class> alpha(static_cast<std::size_t>(k) + 1);
    alpha[0] = 1;
    for (long n = 1; n <= k; ++n)
        alpha[static_cast<std::size_t>(n)] = trace_P(n).p_value;

    // r(d, m) for 1 <= d <= k, 1 <= m <= n_hi; r(0, .) = 0.  The batched
    // evaluator shares the unit-root tables across the grid and raises
    // the truncation until the certification gate accepts each entry.
    const auto r = jd_coeff_grid(k, static_cast<long>(n_hi));
    const auto r_at = [&](long d, exp_t m) -> mpz_class {
        return d == 0 ? mpz_class(0)
                      : r[static_cast<std::size_t>(d)]
                         [static_cast<std::size_t>(m)]
                             .rounded;
    };

    std::vector<mpz_class> c(static_cast<std::size_t>(n_hi + k) + 1);
    const auto at = [&](exp_t e) -> mpz_class& {
        return c[static_cast<std::size_t>(e + k)];
    };

    at(0) += alpha[static_cast<std::size_t>(k)];
    for (long n = 0; n <= k - 1; ++n) {
        const mpz_class& a = alpha[static_cast<std::size_t>(n)];
        const long d1 = k - n;
        const long d0 = k - n - 1;
        at(-d1) += a;          // q^{-d1} of R_{d1}
        at(-d0) -= a;          // q^{-d0} of R_{d0} (constant 1 when d0 = 0)
        for (exp_t m = 1; m <= n_hi; ++m)
            at(m) += a * (r_at(d1, m) - r_at(d0, m));
    }
    return zseries(-static_cast<exp_t>(k), std::move(c), n_hi + 1);
}

} // namespace extremal
