// The Hauptmodul, Faber system, Hecke route, and extremal functions,
// cross-checked against independent constructions: j via E6^2/Delta + 1728,
// Faber polynomials via the generating series, principal parts via a
// partition dynamic program.

#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include <extremal/errors.hpp>
#include <extremal/jpolynomial.hpp>
#include <extremal/modular_functions.hpp>
#include <extremal/qseries.hpp>
#include <extremal/series_core.hpp>

using namespace extremal;

namespace {

// Oracle: j = E6^2 / Delta + 1728, a different route than the library's
// E4^3 / Delta.
zseries j_oracle(exp_t N)
{
    const exp_t W = N + 2;
    const zseries e6 =
        zseries::one() - mpz_class(504) * sigma_series(5, W);
    return ((e6 * e6) * delta_series(W).inverse()).truncated(N) +
           zseries::constant(1728);
}

// Oracle: partitions of n with all parts >= 2, direct dynamic program.
std::vector<mpz_class> restricted_oracle(int n_max)
{
    std::vector<mpz_class> ways(static_cast<std::size_t>(n_max) + 1);
    ways[0] = 1;
    for (int part = 2; part <= n_max; ++part)
        for (int s = part; s <= n_max; ++s)
            ways[static_cast<std::size_t>(s)] +=
                ways[static_cast<std::size_t>(s - part)];
    return ways;
}

mpz_class horner_at(const jpolynomial& p, const mpz_class& x)
{
    mpz_class acc = 0;
    for (long i = p.degree(); i >= 0; --i)
        acc = acc * x + p.coeff(i);
    return acc;
}

} // namespace

TEST_CASE("j series agrees with the E6 route and the classical values")
{
    const zseries j = j_series(40);
    const zseries oracle = j_oracle(40);
    REQUIRE(j.valuation() == -1);
    REQUIRE(agrees(j, oracle));

    REQUIRE(j.coeff(-1) == 1);
    REQUIRE(j.coeff(0) == 744);
    REQUIRE(j.coeff(1) == 196884);
    REQUIRE(j.coeff(2) == 21493760);
    REQUIRE(j.coeff(3) == 864299970);
    REQUIRE(j.coeff(4) == mpz_class("20245856256"));
    REQUIRE(j.coeff(5) == mpz_class("333202640600"));

    const zseries J = J_series(40);
    REQUIRE(J.coeff(0) == 0);
    REQUIRE(J.coeff(-1) == 1);
    REQUIRE(J.coeff(1) == 196884);
}

TEST_CASE("greedy Faber system: structure and polynomial views")
{
    const exp_t N = 40;
    const faber_system sys = faber_and_jd(8, N);
    REQUIRE(sys.F.size() == 9);
    REQUIRE(sys.Jd.size() == 9);

    SECTION("each basis function is q^{-d} + O(q)")
    {
        for (long d = 1; d <= 8; ++d) {
            const zseries& Jd = sys.Jd[static_cast<std::size_t>(d)];
            REQUIRE(Jd.valuation() == -d);
            REQUIRE(Jd.coeff(-d) == 1);
            for (exp_t m = -d + 1; m <= 0; ++m)
                REQUIRE(Jd.coeff(m) == 0);
        }
    }

    SECTION("each Faber polynomial is monic of degree d")
    {
        for (long d = 0; d <= 8; ++d) {
            REQUIRE(sys.F[static_cast<std::size_t>(d)].degree() == d);
            REQUIRE(sys.F[static_cast<std::size_t>(d)].is_monic());
        }
    }

    SECTION("the classical degree-2 polynomial")
    {
        const jpolynomial& F2 = sys.F[2];
        REQUIRE(F2.coeff(2) == 1);
        REQUIRE(F2.coeff(1) == -1488);
        REQUIRE(F2.coeff(0) == 159768);
    }

    SECTION("evaluating F_d at the j expansion reproduces J_d")
    {
        const zseries j = j_series(N);
        for (long d = 0; d <= 8; ++d) {
            const zseries via_poly =
                sys.F[static_cast<std::size_t>(d)].evaluate(j);
            REQUIRE(agrees(via_poly,
                           sys.Jd[static_cast<std::size_t>(d)]));
        }
    }

    SECTION("known coefficient of J_2")
    {
        REQUIRE(sys.Jd[2].coeff(1) == mpz_class("42987520"));
    }
}

TEST_CASE("Hecke route matches the greedy ladder")
{
    const exp_t N = 30;
    const faber_system sys = faber_and_jd(6, N + 6);
    for (long d = 1; d <= 6; ++d) {
        const zseries h = jd_via_hecke(d, N);
        REQUIRE(h.valuation() == -d);
        REQUIRE(h.order() == N);
        const zseries g =
            sys.Jd[static_cast<std::size_t>(d)].truncated(N);
        REQUIRE(agrees(h, g));
    }
}

TEST_CASE("generating-series Faber polynomials match the greedy recurrence")
{
    const std::vector<jpolynomial> F = omega_series(20, 22);
    const faber_system sys = faber_and_jd(20, 22);
    REQUIRE(F.size() == 21);
    for (std::size_t d = 0; d < F.size(); ++d)
        REQUIRE(F[d] == sys.F[d]);

    REQUIRE_THROWS_AS(omega_series(5, 5), domain_error);
}

TEST_CASE("two-variable expansion identity through bi-order (M, M)")
{
    const omega_identity_report rep = omega_identity_check(5);
    REQUIRE(rep.pass);
    // (M+1)(2M+1) slice entries plus M^2 symmetry entries.
    REQUIRE(rep.entries_checked == 6 * 11 + 25);

    // The naive transposed identification of mixed coefficients is *not*
    // part of the identity: the two expansion orders genuinely differ.
    const faber_system sys = faber_and_jd(2, 6);
    const mpz_class a21 = sys.Jd[2].coeff(1);
    const mpz_class a12 = sys.Jd[1].coeff(2);
    REQUIRE(a21 == 42987520);
    REQUIRE(a12 == 21493760);
    REQUIRE(a21 != a12);
    REQUIRE(mpz_class(1) * a21 == mpz_class(2) * a12);
}

TEST_CASE("principal part operator")
{
    const zseries f = zseries(-3, {mpz_class(4), mpz_class(0), mpz_class(-1),
                                   mpz_class(7), mpz_class(9)},
                              2);
    const principal_part_t pp = principal_part(f);
    REQUIRE(pp.coeff_at(-3) == 4);
    REQUIRE(pp.coeff_at(-2) == 0);
    REQUIRE(pp.coeff_at(-1) == -1);
    REQUIRE(pp.coeff_at(0) == 7);
    REQUIRE(pp.terms.size() == 3);

    const zseries no_const = zseries(-2, {mpz_class(1)}, -1);
    REQUIRE_THROWS_AS(principal_part(no_const), precision_error);
}

TEST_CASE("extremal functions: small cases against the opening examples")
{
    SECTION("Z_1 = J")
    {
        const zk_function z1 = zk_build(1, 25);
        REQUIRE(agrees(z1.series, J_series(25)));
        REQUIRE(z1.poly_in_x.degree() == 1);
        REQUIRE(z1.poly_in_x.coeff(0) == -744);
        REQUIRE(z1.poly_in_j == jpolynomial::variable());
    }

    SECTION("Z_2 = J_2 + 1, i.e. J^2 - 393767")
    {
        const zk_function z2 = zk_build(2, 25);
        REQUIRE(z2.series.coeff(-2) == 1);
        REQUIRE(z2.series.coeff(-1) == 0);
        REQUIRE(z2.series.coeff(0) == 1);
        REQUIRE(z2.series.coeff(1) == mpz_class("42987520"));
        REQUIRE(z2.poly_in_j.degree() == 2);
        REQUIRE(z2.poly_in_j.coeff(2) == 1);
        REQUIRE(z2.poly_in_j.coeff(1) == 0);
        REQUIRE(z2.poly_in_j.coeff(0) == -393767);
    }

    SECTION("principal parts equal the parts->=2 partition numbers")
    {
        const auto oracle = restricted_oracle(12);
        for (long k = 1; k <= 12; ++k) {
            const zk_function z = zk_build(k, 5);
            for (long m = 0; m <= k; ++m)
                REQUIRE(z.series.coeff(-m) ==
                        oracle[static_cast<std::size_t>(k - m)]);
        }
    }

    SECTION("the polynomial views are consistent with the series")
    {
        const zk_function z = zk_build(4, 30);
        const zseries via_poly = z.poly_in_x.evaluate(j_series(36));
        REQUIRE(agrees(via_poly.truncated(30), z.series));
        // poly_in_j is poly_in_x rewritten around 744.
        for (long x0 : {-2L, 0L, 1L, 745L}) {
            const mpz_class lhs = horner_at(z.poly_in_j, x0 - 744);
            const mpz_class rhs = horner_at(z.poly_in_x, x0);
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("telescoped partition route agrees with a test-local rebuild")
{
    // Rebuild Z_k from the formula with an independent partition oracle.
    const exp_t N = 15;
    const long k = 6;
    const faber_system sys = faber_and_jd(k, N + k);
    std::vector<mpz_class> p(static_cast<std::size_t>(k) + 1);
    {
        std::vector<mpz_class> ways(static_cast<std::size_t>(k) + 1);
        ways[0] = 1;
        for (long part = 1; part <= k; ++part)
            for (long s = part; s <= k; ++s)
                ways[static_cast<std::size_t>(s)] +=
                    ways[static_cast<std::size_t>(s - part)];
        p = ways;
    }
    zseries rebuilt = zseries::constant(p[static_cast<std::size_t>(k)]);
    rebuilt += sys.Jd[static_cast<std::size_t>(k)] -
               sys.Jd[static_cast<std::size_t>(k - 1)];
    for (long n = 1; n <= k - 1; ++n)
        rebuilt += p[static_cast<std::size_t>(n)] *
                   (sys.Jd[static_cast<std::size_t>(k - n)] -
                    sys.Jd[static_cast<std::size_t>(k - n - 1)]);

    const zk_function z = zk_build(k, N);
    REQUIRE(agrees(rebuilt.truncated(N), z.series));
}

TEST_CASE("jpolynomial algebra")
{
    const jpolynomial X = jpolynomial::variable();
    const jpolynomial P = X * X - mpz_class(3) * X + jpolynomial(7);

    SECTION("shift of variable is evaluation at Y + t")
    {
        const jpolynomial Q = P.shift_variable(5);
        for (long y0 = -4; y0 <= 4; ++y0) {
            REQUIRE(horner_at(Q, y0) == horner_at(P, y0 + 5));
        }
    }

    SECTION("product against naive convolution")
    {
        const jpolynomial A(std::vector<mpz_class>{2, -1, 3});
        const jpolynomial B(std::vector<mpz_class>{0, 5, 1, -2});
        const jpolynomial C = A * B;
        REQUIRE(C.degree() == 5);
        for (long e = 0; e <= 5; ++e) {
            mpz_class expect = 0;
            for (long i = 0; i <= 2; ++i)
                if (e - i >= 0 && e - i <= 3)
                    expect += A.coeff(i) * B.coeff(e - i);
            REQUIRE(C.coeff(e) == expect);
        }
    }

    SECTION("degree bookkeeping")
    {
        REQUIRE(jpolynomial().degree() == -1);
        REQUIRE((P - P).degree() == -1);
        REQUIRE(jpolynomial(5).degree() == 0);
    }
}
