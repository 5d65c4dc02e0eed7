#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <mpfr.h>

#include "bigfloat.hpp"
#include "errors.hpp"

// Rademacher-type exact formulas, evaluated as certified numerics:
//
//   p(n)    = 2 pi (24n-1)^{-3/4} sum_{k>=1} A_k(n)/k
//                 * I_{3/2}( pi sqrt(24n-1) / (6k) ),
//   A_k(n)  = (1/2) sqrt(k/12) sum_{d mod 24k, d^2 == 1-24n mod 24k}
//                 (12/d) e^{pi i d / (6k)},
//
//   r(d,n)  = 2 pi sqrt(d/n) sum_{c>=1} K_d(n;c)/c * I_1( 4 pi sqrt(dn)/c ),
//   K_d(n;c)= sum_{r mod c, gcd(r,c)=1} e^{2 pi i (-d rbar + n r)/c},
//
// where r(d,n) is the coefficient of q^n in the basis function
// q^{-d} + O(q), (12/.) is a Kronecker symbol and rbar the inverse of r
// mod c.  Series are truncated at an explicit c_max; the result is rounded
// to the nearest integer and the rounding is *gated*: a margin of 0.25 or
// worse raises inconclusive_error rather than returning a guess.
//
// Every sum is evaluated in a fixed order (ascending k or c, ascending
// solution/residue inside) at a fixed precision, so results are
// bit-deterministic for given (inputs, c_max, prec).

namespace extremal {

// Kronecker symbol (12/d).  Closed form: 12 = 4*3, and for odd d coprime
// to 12 the symbol is +1 iff d == +-1 mod 12.  Even d or gcd > 1 give 0.
inline int kronecker12(long long d)
{
    const long long r = ((d % 12) + 12) % 12;
    if (r == 1 || r == 11)
        return 1;
    if (r == 5 || r == 7)
        return -1;
    return 0;
}

namespace detail {

// e^{2 pi i num/den} with the angle reduced exactly: only num mod den
// enters MPFR, so the argument passed to sin/cos lies in [0, 2 pi).
inline big_complex unit_exp(long long num, long long den, mpfr_prec_t prec)
{
    if (den <= 0)
        throw domain_error("unit_exp: denominator must be positive");
    const long long t = ((num % den) + den) % den;
    const big_real angle =
        big_real::pi(prec).mul_si(2 * t).div_si(den);
    auto [s, c] = angle.sin_cos();
    return big_complex(std::move(c), std::move(s));
}

inline long long inverse_mod(long long r, long long c)
{
    long long t = 0, new_t = 1;
    long long a = c, b = ((r % c) + c) % c;
    while (b != 0) {
        const long long q = a / b;
        const long long tmp_t = t - q * new_t;
        t = new_t;
        new_t = tmp_t;
        const long long tmp_a = a - q * b;
        a = b;
        b = tmp_a;
    }
    if (a != 1)
        throw domain_error("inverse_mod: arguments are not coprime");
    return ((t % c) + c) % c;
}

} // namespace detail

// A_k(n), evaluated literally over d in [0, 24k).  The imaginary part is
// returned too; it cancels exactly in the mathematics (d pairs with -d) and
// serves as a numerical health check for the caller.
inline big_complex kloosterman_A(long k, long n, mpfr_prec_t prec)
{
    if (k < 1)
        throw domain_error("kloosterman_A: k must be >= 1");
    const long long M = 24LL * k;
    // d^2 == 1 - 24n (mod 24k)
    const long long target = (((1 - 24LL * n) % M) + M) % M;
    big_complex sum(prec);
    for (long long d = 0; d < M; ++d) {
        if ((d * d) % M != target)
            continue;
        const int chi = kronecker12(d);
        if (chi == 0)
            continue;
        // e^{pi i d/(6k)} = e^{2 pi i d/(12k)}
        big_complex u = detail::unit_exp(d, 12LL * k, prec);
        if (chi < 0)
            u = big_complex(-u.re, -u.im);
        sum += u;
    }
    const big_real scale =
        big_real(k, prec).div_si(12).sqrt().div_si(2);
    return sum.scaled(scale);
}

// K_d(n;c).  For c = 1 the empty-modulus convention gives K = 1.
inline big_complex kloosterman_K(long d, long n, long c, mpfr_prec_t prec)
{
    if (c < 1)
        throw domain_error("kloosterman_K: c must be >= 1");
    if (c == 1)
        return big_complex(big_real(1L, prec), big_real(0L, prec));
    big_complex sum(prec);
    for (long long r = 1; r < c; ++r) {
        if (std::gcd(r, static_cast<long long>(c)) != 1)
            continue;
        const long long rbar = detail::inverse_mod(r, c);
        const long long t = -static_cast<long long>(d) * rbar +
                            static_cast<long long>(n) * r;
        sum += detail::unit_exp(t, c, prec);
    }
    return sum;
}

// I_1(x) by the ascending series (x/2) sum_m (x^2/4)^m / (m! (m+1)!).
// Every term is positive, so no cancellation occurs and the truncation
// point is read off the term/sum exponent gap.
inline big_real bessel_I1(const big_real& x, mpfr_prec_t prec)
{
    if (x.sign() < 0)
        throw domain_error("bessel_I1: negative argument");
    const mpfr_prec_t wp = prec + 16;
    big_real x2(x);
    const big_real q = (x2 * x2).div_si(4); // x^2/4 at x's precision
    big_real term(1L, wp);
    big_real sum(1L, wp);
    for (long m = 0; m < 1000000; ++m) {
        term = (term * q).div_si(m + 1).div_si(m + 2);
        sum += term;
        if (term.is_zero() ||
            mpfr_get_exp(term.raw()) + static_cast<long>(wp) <
                mpfr_get_exp(sum.raw()))
            return sum * x.div_si(2);
    }
    throw inconclusive_error("bessel_I1: series did not terminate");
}

// I_{3/2}(x) = sqrt(2/(pi x)) (cosh x - sinh x / x).  For small x the
// bracket is ~ x^2/3 against cosh x ~ 1, so 2*log2(1/x) guard bits absorb
// the cancellation.
inline big_real bessel_I32(const big_real& x, mpfr_prec_t prec)
{
    if (x.sign() <= 0)
        throw domain_error("bessel_I32: argument must be positive");
    long guard = 8;
    if (x.cmp_d(1.0) < 0) {
        const double xd = x.to_double();
        guard += 2 * static_cast<long>(std::ceil(std::log2(1.0 / xd)));
    }
    const mpfr_prec_t wp = prec + guard;
    const big_real xw = big_real(0L, wp) + x;
    auto [sh, ch] = xw.sinh_cosh();
    const big_real bracket = ch - sh / xw;
    const big_real pref =
        (big_real(2L, wp) / (big_real::pi(wp) * xw)).sqrt();
    return pref * bracket;
}

struct rademacher_estimate {
    mpz_class rounded;      // nearest integer to the truncated series
    double gate_margin = 0; // |value - rounded|; must be < 0.25
    long terms_used = 0;    // number of k (or c) summands evaluated
    double last_term = 0;   // |final summand| as a tail-size indicator
    std::string value;      // deterministic decimal rendering
};

namespace detail {

// Accept a truncated value only if (a) it is within 0.25 of an integer
// and (b) the sum moved by less than 0.25 from the quarter-length and
// from the half-length checkpoints to the full length.  The margin test
// alone is not sufficient: while the tail is still large the fractional
// part is essentially arbitrary, so it lands within 0.25 of a (wrong)
// integer about half the time.  The drift tests close that hole: the
// truncation error of these series shrinks by a factor >= 2 per doubling
// of the length (measured across the coefficient grid), so a small drift
// over two octaves bounds |error| by drift/(ratio^2 - 1) < 0.25, and an
// error below 0.25 rounds correctly.  A single window can sit on an
// accidental fluctuation; two simultaneous small windows would need a
// three-point plateau, which the geometric decay rules out.
inline rademacher_estimate gated(const big_real& value,
                                 const std::vector<big_real>& drifts,
                                 const big_real& im_acc, long terms,
                                 double last_term, const char* what)
{
    // The imaginary parts cancel pairwise in exact arithmetic; anything
    // above rounding noise means the implementation is wrong, not that
    // the series needs more terms.
    if (!im_acc.abs_less_2exp(-24))
        throw verification_error(std::string(what) +
                                 ": imaginary part failed to cancel");
    rademacher_estimate est;
    est.rounded = value.round_to_int();
    est.gate_margin = value.dist_to_int().to_double();
    est.terms_used = terms;
    est.last_term = last_term;
    est.value = value.str(25);
    if (!(est.gate_margin < 0.25))
        throw inconclusive_error(
            std::string(what) +
            ": rounding gate failed (margin " +
            std::to_string(est.gate_margin) +
            "); increase the series length or precision");
    for (const big_real& drift : drifts)
        if (drift.cmp_d(0.25) >= 0)
            throw inconclusive_error(
                std::string(what) + ": truncation unstable (drift " +
                std::to_string(drift.to_double()) +
                " across the checkpoint window); increase the series "
                "length");
    return est;
}

// Drifts of the full-length sum against the quarter- and half-length
// checkpoints, in final-value units; degenerate windows (length < 4) are
// skipped.
inline std::vector<big_real> checkpoint_drifts(const big_real& sum,
                                               const big_real& quarter_sum,
                                               const big_real& half_sum,
                                               const big_real& pref,
                                               long c_max)
{
    std::vector<big_real> drifts;
    if (c_max / 4 >= 1)
        drifts.push_back(((sum - quarter_sum) * pref).abs());
    if (c_max / 2 >= 1)
        drifts.push_back(((sum - half_sum) * pref).abs());
    return drifts;
}

} // namespace detail

// p(n) by the Rademacher series, truncated at c_max (default 5 ceil(sqrt n))
// with working precision defaulting to 64 + main-term bits.
inline rademacher_estimate p_rademacher(long n, long c_max = 0,
                                        mpfr_prec_t prec = 0)
{
    if (n < 1)
        throw domain_error("p_rademacher: n must be >= 1");
    if (c_max <= 0)
        c_max = 5 * static_cast<long>(std::ceil(std::sqrt(
                        static_cast<double>(n))));
    const double x1 = M_PI * std::sqrt(24.0 * n - 1) / 6.0;
    if (prec <= 0)
        prec = 64 + static_cast<mpfr_prec_t>(std::ceil(x1 / std::log(2.0)));

    const big_real pi = big_real::pi(prec);
    const big_real arg_num =
        pi * big_real(24L * n - 1, prec).sqrt(); // pi sqrt(24n-1)

    big_real sum(prec);
    big_real quarter_sum(prec);
    big_real half_sum(prec);
    big_real im_acc(prec);
    double last = 0;
    for (long k = 1; k <= c_max; ++k) {
        const big_complex A = kloosterman_A(k, n, prec);
        im_acc += A.im;
        const big_real x = arg_num.div_si(6 * k);
        const big_real term = A.re.div_si(k) * bessel_I32(x, prec);
        sum += term;
        last = term.abs().to_double();
        if (k == c_max / 4)
            quarter_sum = sum;
        if (k == c_max / 2)
            half_sum = sum;
    }
    const big_real pref = pi.mul_si(2) / big_real(24L * n - 1, prec).pow_3_4();
    return detail::gated(
        sum * pref,
        detail::checkpoint_drifts(sum, quarter_sum, half_sum, pref, c_max),
        im_acc, c_max, last, "p_rademacher");
}

// The coefficient of q^n in the basis function q^{-d} + O(q), by the
// Rademacher series truncated at c_max (default 32 + 4 ceil(sqrt(dn))).
inline rademacher_estimate jd_coeff_rademacher(long d, long n,
                                               long c_max = 0,
                                               mpfr_prec_t prec = 0)
{
    if (d < 1 || n < 1)
        throw domain_error("jd_coeff_rademacher: d and n must be >= 1");
    const double dn = static_cast<double>(d) * static_cast<double>(n);
    if (c_max <= 0)
        c_max = 32 + 4 * static_cast<long>(std::ceil(std::sqrt(dn)));
    const double x1 = 4.0 * M_PI * std::sqrt(dn);
    if (prec <= 0)
        prec = 64 + static_cast<mpfr_prec_t>(std::ceil(x1 / std::log(2.0)));

    const big_real pi = big_real::pi(prec);
    const big_real arg_num =
        pi.mul_si(4) * big_real(static_cast<long>(d), prec)
                           .mul_si(n)
                           .sqrt(); // 4 pi sqrt(dn)

    big_real sum(prec);
    big_real quarter_sum(prec);
    big_real half_sum(prec);
    big_real im_acc(prec);
    double last = 0;
    for (long c = 1; c <= c_max; ++c) {
        const big_complex K = kloosterman_K(d, n, c, prec);
        im_acc += K.im;
        const big_real x = arg_num.div_si(c);
        const big_real term = K.re.div_si(c) * bessel_I1(x, prec);
        sum += term;
        last = term.abs().to_double();
        if (c == c_max / 4)
            quarter_sum = sum;
        if (c == c_max / 2)
            half_sum = sum;
    }
    const big_real pref = pi.mul_si(2) *
                          (big_real(static_cast<long>(d), prec) /
                           big_real(static_cast<long>(n), prec))
                              .sqrt();
    return detail::gated(
        sum * pref,
        detail::checkpoint_drifts(sum, quarter_sum, half_sum, pref, c_max),
        im_acc, c_max, last, "jd_coeff_rademacher");
}

// Batched jd_coeff over the whole grid 1 <= d <= d_max, 1 <= n <= n_max.
// For a fixed modulus c, every grid point sums the same unit roots
// e^{2 pi i t/c} over the same (r, r^{-1}) pairs; computing those tables
// once per c instead of once per (point, c) removes the dominant
// repeated-trigonometry cost of calling jd_coeff_rademacher per point.
// Summands, summation order, and the acceptance gate are identical to
// the single-point routine, so a grid entry is bit-identical to
// jd_coeff_rademacher(d, n, entry.terms_used, prec) with this call's
// working precision.
//
// Each point starts at max(the single-point default, 256 ceil(sqrt(dn)))
// summands -- the measured convergence scale of this series -- and
// points whose gate refuses are retried with doubled length (up to three
// doublings) before the failure propagates.
//
// Returns estimates indexed as [d][n]; row 0 and column 0 are unused
// default entries.
inline std::vector<std::vector<rademacher_estimate>>
jd_coeff_grid(long d_max, long n_max, mpfr_prec_t prec = 0)
{
    if (d_max < 1 || n_max < 1)
        throw domain_error("jd_coeff_grid: d_max and n_max must be >= 1");
    const double dn_top =
        static_cast<double>(d_max) * static_cast<double>(n_max);
    if (prec <= 0)
        prec = 64 + static_cast<mpfr_prec_t>(std::ceil(
                        4.0 * M_PI * std::sqrt(dn_top) / std::log(2.0)));

    const big_real pi = big_real::pi(prec);

    struct point {
        long d, n, c_max;
        big_real sum, quarter, half, im_acc, arg_num;
        double last;
        bool done;
        rademacher_estimate est;
    };
    std::vector<point> pts;
    pts.reserve(static_cast<size_t>(d_max) * static_cast<size_t>(n_max));
    for (long d = 1; d <= d_max; ++d)
        for (long n = 1; n <= n_max; ++n) {
            const long root = static_cast<long>(std::ceil(std::sqrt(
                static_cast<double>(d) * static_cast<double>(n))));
            const long c0 = std::max(32 + 4 * root, 256 * root);
            pts.push_back(point{d, n, c0, big_real(prec), big_real(prec),
                                big_real(prec), big_real(prec),
                                pi.mul_si(4) *
                                    big_real(d, prec).mul_si(n).sqrt(),
                                0.0, false, rademacher_estimate{}});
        }

    for (int round = 0; round < 4; ++round) {
        long top = 0;
        for (auto& p : pts)
            if (!p.done) {
                p.sum = big_real(prec);
                p.quarter = big_real(prec);
                p.half = big_real(prec);
                p.im_acc = big_real(prec);
                p.last = 0;
                top = std::max(top, p.c_max);
            }
        if (top == 0)
            break;

        std::vector<std::pair<long long, long long>> units; // (r, r^{-1})
        std::vector<big_complex> roots; // e^{2 pi i t/c}, t = 0..c-1
        for (long c = 1; c <= top; ++c) {
            bool built = false;
            for (auto& p : pts) {
                if (p.done || c > p.c_max)
                    continue;
                big_complex K(prec);
                if (c == 1) {
                    K = big_complex(big_real(1L, prec), big_real(0L, prec));
                } else {
                    if (!built) {
                        units.clear();
                        roots.clear();
                        roots.reserve(static_cast<size_t>(c));
                        for (long t = 0; t < c; ++t)
                            roots.push_back(detail::unit_exp(t, c, prec));
                        for (long long r = 1; r < c; ++r)
                            if (std::gcd(r, static_cast<long long>(c)) == 1)
                                units.emplace_back(
                                    r, detail::inverse_mod(r, c));
                        built = true;
                    }
                    for (const auto& [r, rbar] : units) {
                        const long long t =
                            (((-static_cast<long long>(p.d) * rbar +
                               static_cast<long long>(p.n) * r) %
                              c) +
                             c) %
                            c;
                        K += roots[static_cast<size_t>(t)];
                    }
                }
                p.im_acc += K.im;
                const big_real term = K.re.div_si(c) *
                                      bessel_I1(p.arg_num.div_si(c), prec);
                p.sum += term;
                p.last = term.abs().to_double();
                if (c == p.c_max / 4)
                    p.quarter = p.sum;
                if (c == p.c_max / 2)
                    p.half = p.sum;
            }
        }

        for (auto& p : pts) {
            if (p.done)
                continue;
            const big_real pref =
                pi.mul_si(2) *
                (big_real(p.d, prec) / big_real(p.n, prec)).sqrt();
            try {
                p.est = detail::gated(
                    p.sum * pref,
                    detail::checkpoint_drifts(p.sum, p.quarter, p.half,
                                              pref, p.c_max),
                    p.im_acc, p.c_max, p.last, "jd_coeff_rademacher");
                p.done = true;
            } catch (const inconclusive_error&) {
                if (round == 3)
                    throw;
                p.c_max *= 2;
            }
        }
    }

    std::vector<std::vector<rademacher_estimate>> grid(
        static_cast<size_t>(d_max) + 1,
        std::vector<rademacher_estimate>(static_cast<size_t>(n_max) + 1));
    for (auto& p : pts)
        grid[static_cast<size_t>(p.d)][static_cast<size_t>(p.n)] =
            std::move(p.est);
    return grid;
}

} // namespace extremal
