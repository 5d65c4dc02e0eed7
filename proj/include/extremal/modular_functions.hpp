#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"
#include "jpolynomial.hpp"
#include "qseries.hpp"
#include "series_core.hpp"

// The modular-function layer: the Hauptmodul j and its normalization
// J = j - 744, the Faber polynomials F_d and basis functions
// J_d = q^{-d} + O(q), the principal-part operator, and the extremal
// functions Z_k assembled by two independent routes.

namespace extremal {

// j = E4^3 / Delta = q^{-1} + 744 + 196884q + ...; window [-1, N).
inline zseries j_series(exp_t N)
{
    if (N < 2)
        throw domain_error("j_series: N must be >= 2");
    const exp_t W = N + 2;
    const zseries e4 =
        zseries::one() + mpz_class(240) * sigma_series(3, W);
    const zseries num = e4.pow(3);
    const zseries delta_inv = delta_series(W).inverse();
    return (num * delta_inv).truncated(N);
}

// J = j - 744 = q^{-1} + 196884q + ...; zero constant term; window [-1, N).
inline zseries J_series(exp_t N)
{
    return j_series(N) - zseries::constant(744);
}

// Faber polynomials F_d (monic, degree d, F_d(j) = q^{-d} + O(q)) together
// with the basis functions J_d = F_d(j) as q-series.
struct faber_system {
    std::vector<jpolynomial> F; // F[d], 0 <= d <= d_max
    std::vector<zseries> Jd;    // Jd[d]; Jd[d] has window [-d, N-d+1)
};

// Canonical construction by greedy principal-part reduction: starting from
// J*J_{m-1} = q^{-m} + (lower-order pole terms) + ..., subtract the unique
// integer combination of J_{m-1}, ..., J_1, 1 that cancels every exponent
// from -(m-1) up to 0, leaving exactly q^{-m} + O(q).  The polynomial
// recurrence F_m = (X-744)*F_{m-1} - (same combination of F_e) runs in
// lockstep, so F_d(j) = J_d holds by construction and is re-checked in the
// test suite.  Integer arithmetic only; no linear solves.
inline faber_system faber_and_jd(long d_max, exp_t N)
{
    if (d_max < 0)
        throw domain_error("faber_and_jd: d_max must be >= 0");
    if (N < d_max + 2)
        throw domain_error("faber_and_jd: window O(q^N) too small to "
                           "confirm J_d = q^{-d} + O(q); need N >= d_max+2");
    faber_system sys;
    sys.F.reserve(static_cast<std::size_t>(d_max) + 1);
    sys.Jd.reserve(static_cast<std::size_t>(d_max) + 1);

    sys.F.push_back(jpolynomial(1));
    sys.Jd.push_back(zseries::one().truncated(N)); // J_0 = 1 on [0, N)
    if (d_max == 0)
        return sys;

    const zseries J = J_series(N);
    sys.F.push_back(jpolynomial::variable() - jpolynomial(744));
    sys.Jd.push_back(J);

    for (long m = 2; m <= d_max; ++m) {
        zseries T = J * sys.Jd[static_cast<std::size_t>(m - 1)];
        jpolynomial Fm =
            (jpolynomial::variable() - jpolynomial(744)) *
            sys.F[static_cast<std::size_t>(m - 1)];
        for (long e = m - 1; e >= 1; --e) {
            const mpz_class a = T.coeff(-e);
            if (sgn(a) != 0) {
                T -= a * sys.Jd[static_cast<std::size_t>(e)];
                Fm -= a * sys.F[static_cast<std::size_t>(e)];
            }
        }
        const mpz_class a0 = T.coeff(0);
        if (sgn(a0) != 0) {
            T -= zseries::constant(a0);
            Fm -= jpolynomial(a0);
        }
        sys.F.push_back(std::move(Fm));
        sys.Jd.push_back(std::move(T));
    }
    return sys;
}

// Faber polynomials extracted from their two-variable generating series
//   Omega(X; tau)
//     = (1 - 24 sum sigma_13(n) q^n) / (q prod (1-q^n)^24) * 1/(j(tau) - X)
//     = sum_{d>=0} F_d(X) q^d
//     = 1 + (X - 744) q + (X^2 - 1488 X + 159768) q^2 + ...,
// expanded over the coefficient ring Z[X] through the q-window [0, N) and
// read off at q^0..q^{d_max}.  Cross-route check for the greedy
// construction.  Note the denominator is j(tau) - X, not (j - 744) - X:
// only that normalization makes the q^d coefficient the classical monic
// Faber polynomial with F_d(j) = J_d = q^{-d} + O(q).
inline std::vector<jpolynomial> omega_series(long d_max, exp_t N)
{
    if (d_max < 0)
        throw domain_error("omega_series: d_max must be >= 0");
    if (N <= d_max)
        throw domain_error("omega_series: window must extend past d_max");
    const exp_t W = N + 1;

    // E14/Delta = (1 - 24 sum sigma_13 q^n) * Delta^{-1}, an ordinary
    // integer series with window [-1, W-2).
    const zseries e14 =
        zseries::one() - mpz_class(24) * sigma_series(13, W);
    const zseries a = e14 * delta_series(W).inverse();

    // j - X over Z[X]: same q-window as j, constant term 744 - X.
    const zseries j = j_series(W);
    std::vector<jpolynomial> bc;
    bc.reserve(static_cast<std::size_t>(j.order() - j.valuation()));
    for (exp_t m = j.valuation(); m < j.order(); ++m) {
        jpolynomial p(j.coeff(m));
        if (m == 0)
            p -= jpolynomial::variable();
        bc.push_back(std::move(p));
    }
    const xseries b(j.valuation(), std::move(bc), j.order());

    // Lift the scalar factor into Z[X] and assemble Omega.
    std::vector<jpolynomial> ac;
    ac.reserve(static_cast<std::size_t>(a.order() - a.valuation()));
    for (exp_t m = a.valuation(); m < a.order(); ++m)
        ac.push_back(jpolynomial(a.coeff(m)));
    const xseries ax(a.valuation(), std::move(ac), a.order());

    const xseries omega = ax * b.inverse(); // window [0, W - 1) = [0, N)

    std::vector<jpolynomial> F;
    F.reserve(static_cast<std::size_t>(d_max) + 1);
    for (long d = 0; d <= d_max; ++d)
        F.push_back(omega.coeff(d));
    return F;
}

// Hecke-operator route for the basis functions: J_d = d (J | T_d) with the
// weight-0 coefficient rule
//   b(n) = sum_{e | gcd(d,n)} (d/e) * c(d n / e^2)   for n >= 1,
// where J = q^{-1} + sum c(m) q^m (c(-1) = 1, c(0) = 0).  The normalization
// is validated against the greedy route by the test suite.
inline zseries jd_via_hecke(long d, exp_t N)
{
    if (d < 1)
        throw domain_error("jd_via_hecke: d must be >= 1");
    if (N < 1)
        throw domain_error("jd_via_hecke: N must be >= 1");
    const zseries J = J_series(d * (N - 1) + 2);
    std::vector<mpz_class> c(static_cast<std::size_t>(N + d));
    c[0] = 1; // q^{-d}
    for (exp_t n = 1; n < N; ++n) {
        mpz_class b(0);
        for (long e = 1; e <= d; ++e) {
            if (d % e != 0 || n % e != 0)
                continue;
            const exp_t arg = (d / e) * (n / e); // d*n/e^2
            b += mpz_class(d / e) * J.coeff(arg);
        }
        c[static_cast<std::size_t>(n + d)] = std::move(b);
    }
    return zseries(-d, std::move(c), N);
}

// The terms with nonpositive exponent of a q-series, the constant included.
// Only nonzero entries are stored; coeff_at() answers 0 for the rest.
struct principal_part_t {
    std::map<exp_t, mpz_class> terms; // keyed by exponent <= 0

    mpz_class coeff_at(exp_t e) const
    {
        const auto it = terms.find(e);
        return it == terms.end() ? mpz_class(0) : it->second;
    }

    friend bool operator==(const principal_part_t& a,
                           const principal_part_t& b)
    {
        return a.terms == b.terms;
    }
};

// Requires the window to include exponent 0.
inline principal_part_t principal_part(const zseries& f)
{
    if (f.order() <= 0)
        throw precision_error("principal_part: window does not include the "
                              "constant term");
    principal_part_t pp;
    for (exp_t m = std::min<exp_t>(f.valuation(), 0); m <= 0; ++m) {
        mpz_class c = f.coeff(m);
        if (sgn(c) != 0)
            pp.terms.emplace(m, std::move(c));
    }
    return pp;
}

// An extremal function Z_k: its q-series, and its polynomial form in
// X (= j) together with the expanded form in J = X - 744.
struct zk_function {
    long k = 0;
    zseries series;          // window [-k, N)
    jpolynomial poly_in_x;   // Z_k as a polynomial in X = j
    jpolynomial poly_in_j;   // the same polynomial rewritten in J = j - 744
};

// The principal-part coefficients of q^{-k} prod_{n>=2} (1-q^n)^{-1}:
// a[m] multiplies J_m (equivalently q^{-m}), 0 <= m <= k.
inline std::vector<mpz_class> zk_target_coefficients(long k)
{
    const zseries tail =
        restricted_partition_series(k + 1).shifted(-k); // [-k, 1)
    const principal_part_t pp = principal_part(tail);
    std::vector<mpz_class> a(static_cast<std::size_t>(k) + 1);
    for (long m = 0; m <= k; ++m)
        a[static_cast<std::size_t>(m)] = pp.coeff_at(-m);
    return a;
}

namespace detail {

// Route (i): the partition-telescope form
//   Z_k = p(k) + (J_k - J_{k-1}) + sum_{n=1}^{k-1} p(n)(J_{k-n} - J_{k-n-1}),
// evaluated literally with the pentagonal-recurrence oracle.
inline zseries zk_route_partition(long k, const faber_system& sys)
{
    const partition_table pt = partition_numbers(k);
    zseries z = zseries::constant(pt.at(k));
    z += sys.Jd[static_cast<std::size_t>(k)] -
         sys.Jd[static_cast<std::size_t>(k - 1)];
    for (long n = 1; n <= k - 1; ++n)
        z += pt.at(n) * (sys.Jd[static_cast<std::size_t>(k - n)] -
                         sys.Jd[static_cast<std::size_t>(k - n - 1)]);
    return z;
}

// Route (ii): principal-part extraction from the parts->=2 product,
//   Z_k = sum_m a_m J_m with a_m read off q^{-k} prod_{n>=2}(1-q^n)^{-1}.
// Independent of the pentagonal oracle: the a_m come from series inversion.
inline zseries zk_route_principal(long k, const faber_system& sys)
{
    const std::vector<mpz_class> a = zk_target_coefficients(k);
    zseries z = zseries::constant(a[0]);
    for (long m = 1; m <= k; ++m)
        if (sgn(a[static_cast<std::size_t>(m)]) != 0)
            z += a[static_cast<std::size_t>(m)] *
                 sys.Jd[static_cast<std::size_t>(m)];
    return z;
}

} // namespace detail

// Build Z_k from a ladder that already contains J_0..J_k.  Both routes are
// evaluated and must agree exactly; the polynomial forms are assembled from
// the same combination of Faber polynomials.
inline zk_function zk_from_system(long k, const faber_system& sys)
{
    if (k < 1)
        throw domain_error("zk_from_system: k must be >= 1");
    if (static_cast<std::size_t>(k) >= sys.Jd.size())
        throw domain_error("zk_from_system: ladder does not reach J_k");

    zk_function z;
    z.k = k;
    z.series = detail::zk_route_partition(k, sys);
    const zseries alt = detail::zk_route_principal(k, sys);
    if (!agrees(z.series, alt))
        throw verification_error(
            "zk_from_system: the partition-telescope and principal-part "
            "routes disagree for k=" + std::to_string(k));

    const std::vector<mpz_class> a = zk_target_coefficients(k);
    for (long m = 0; m <= k; ++m)
        if (sgn(a[static_cast<std::size_t>(m)]) != 0)
            z.poly_in_x +=
                a[static_cast<std::size_t>(m)] * sys.F[static_cast<std::size_t>(m)];
    z.poly_in_j = z.poly_in_x.shift_variable(744);

    // Structural invariants of the principal part.
    if (z.series.coeff(-k) != 1)
        throw verification_error("zk_from_system: leading coefficient of Z_k "
                                 "is not 1");
    if (k >= 2 && sgn(z.series.coeff(1 - k)) != 0)
        throw verification_error("zk_from_system: w_k(1-k) must vanish");
    return z;
}

// Standalone Z_k with window [-k, N).
inline zk_function zk_build(long k, exp_t N)
{
    if (k < 1)
        throw domain_error("zk_build: k must be >= 1");
    if (N < 2)
        throw domain_error("zk_build: N must be >= 2");
    exp_t ladder = N + k - 1; // J_k needs order N: ladder - k + 1 >= N
    if (ladder < k + 2)       // the ladder itself needs window >= d_max+2
        ladder = k + 2;
    const faber_system sys = faber_and_jd(k, ladder);
    zk_function z = zk_from_system(k, sys);
    z.series = z.series.truncated(N);
    return z;
}

// Report of the two-variable identity check relating the basis expansion
//   sum_{n>=0} J_n p^n   (each J_n a q-series; greedy route)
// to the generating series Omega(X; .) with the p-series of j substituted
// for X (generating-series route).  Writing a(n, d) for the mixed
// coefficient [q^d] J_n = [p^d] J_n(as a p-series), two exact statements
// are verified through bi-order (M, M):
//
//   (1) slicewise: for every d <= M, substituting the p-series of j into
//       F_d reproduces the full basis series J_d on exponents [-M, M] --
//       the q^d coefficient of the two-variable expansion of Omega *is*
//       the d-th basis function;
//   (2) the mixed coefficients of the two opposite expansion orders are
//       coupled by the weighted symmetry  d * a(n, d) = n * a(d, n)  for
//       1 <= n, d <= M.
//
// The naive entry-by-entry identification a(n, d) = a(d, n) is false (the
// double expansion of the underlying kernel depends on which variable is
// expanded first; the two orders differ across the diagonal wall), e.g.
// a(2, 1) = 42987520 while a(1, 2) = 21493760.  (1) + (2) together are the
// order-independent content of the identity.
struct omega_identity_report {
    bool pass = true;
    long first_n = -1, first_d = -1; // first mismatching grid entry
    long entries_checked = 0;
};

inline omega_identity_report omega_identity_check(long M)
{
    if (M < 1)
        throw domain_error("omega_identity_check: M must be >= 1");
    omega_identity_report rep;

    const std::vector<jpolynomial> F = omega_series(M, M + 2);
    const zseries jp = j_series(2 * M + 2); // the p-series of j(z)
    const faber_system sys = faber_and_jd(M, 2 * M + 1);

    const auto fail = [&rep](long n, long d) {
        rep.pass = false;
        rep.first_n = n;
        rep.first_d = d;
    };

    // Phase 1: F_d(j-series) == greedy J_d on exponents [-M, M].
    for (long d = 0; d <= M; ++d) {
        const zseries lhs = F[static_cast<std::size_t>(d)].evaluate(jp);
        const zseries& rhs = sys.Jd[static_cast<std::size_t>(d)];
        for (long n = -M; n <= M; ++n) {
            ++rep.entries_checked;
            if (lhs.coeff(n) != rhs.coeff(n)) {
                fail(n, d);
                return rep;
            }
        }
    }

    // Phase 2: weighted symmetry of the mixed coefficients.
    for (long n = 1; n <= M; ++n) {
        const zseries& Jn = sys.Jd[static_cast<std::size_t>(n)];
        for (long d = 1; d <= M; ++d) {
            const zseries& Jd = sys.Jd[static_cast<std::size_t>(d)];
            ++rep.entries_checked;
            if (mpz_class(d) * Jn.coeff(d) != mpz_class(n) * Jd.coeff(n)) {
                fail(n, d);
                return rep;
            }
        }
    }
    return rep;
}

} // namespace extremal
