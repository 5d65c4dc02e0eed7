// Window algebra of laurent_series and the convolution kernels, checked
// against test-local naive implementations and the documented window laws.

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include <extremal/convolution.hpp>
#include <extremal/errors.hpp>
#include <extremal/qseries.hpp>

using namespace extremal;

namespace {

// Oracle: dense schoolbook product, written independently of the library.
std::vector<mpz_class> mul_naive(const std::vector<mpz_class>& a,
                                 const std::vector<mpz_class>& b,
                                 std::size_t out_len)
{
    std::vector<mpz_class> out(out_len);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (i + j < out_len)
                out[i + j] += a[i] * b[j];
    return out;
}

std::vector<mpz_class> random_vector(std::mt19937_64& rng, std::size_t n,
                                     int bits, bool allow_negative)
{
    std::uniform_int_distribution<int> limb(0, 9);
    std::vector<mpz_class> v(n);
    for (auto& x : v) {
        mpz_class z = 0;
        for (int i = 0; i < bits; i += 3)
            z = z * 8 + limb(rng);
        if (allow_negative && limb(rng) < 4)
            z = -z;
        if (limb(rng) == 0)
            z = 0; // sprinkle exact zeros
        x = z;
    }
    return v;
}

zseries series(exp_t val, std::vector<long> c, exp_t order)
{
    std::vector<mpz_class> z(c.begin(), c.end());
    return zseries(val, std::move(z), order);
}

} // namespace

TEST_CASE("window bookkeeping follows the documented laws")
{
    // f = q^{-1} + 1 + q + O(q^2), g = 1 + q + q^2 + O(q^3)
    const zseries f = series(-1, {1, 1, 1}, 2);
    const zseries g = series(0, {1, 1, 1}, 3);

    SECTION("addition truncates to the smaller window")
    {
        const zseries s = f + g;
        REQUIRE(s.valuation() == -1);
        REQUIRE(s.order() == 2);
        REQUIRE(s.coeff(0) == 2);
        REQUIRE(s.coeff(1) == 2);
    }

    SECTION("multiplication order is min(N1+v2, N2+v1)")
    {
        const zseries p = f * g;
        REQUIRE(p.valuation() == -1);
        REQUIRE(p.order() == 2); // min(2+0, 3-1)
        REQUIRE(p.coeff(-1) == 1);
        REQUIRE(p.coeff(0) == 2);
        REQUIRE(p.coeff(1) == 3);
    }

    SECTION("coefficients below the valuation are exact zeros")
    {
        REQUIRE(f.coeff(-2) == 0);
        REQUIRE(f.coeff(-100) == 0);
    }

    SECTION("coefficients at or beyond the order throw")
    {
        REQUIRE_THROWS_AS(f.coeff(2), precision_error);
        REQUIRE_THROWS_AS(f.coeff(100), precision_error);
    }

    SECTION("truncation can only shrink a window")
    {
        const zseries t = g.truncated(2);
        REQUIRE(t.order() == 2);
        REQUIRE_THROWS_AS(g.truncated(5), precision_error);
        REQUIRE(g.truncated(3).order() == 3); // no-op allowed
    }

    SECTION("exact series report the sentinel-free view")
    {
        const zseries e = zseries::exact(0, {mpz_class(1), mpz_class(-1)});
        REQUIRE(e.is_exact());
        REQUIRE(e.coeff(1000000) == 0); // beyond storage but exact
    }
}

TEST_CASE("exact polynomial identities")
{
    const zseries one_minus_q = zseries::exact(0, {mpz_class(1),
                                                   mpz_class(-1)});
    const zseries one_plus_q = zseries::exact(0, {mpz_class(1),
                                                  mpz_class(1)});
    const zseries prod = one_minus_q * one_plus_q;
    REQUIRE(prod.is_exact());
    REQUIRE(prod.coeff(0) == 1);
    REQUIRE(prod.coeff(1) == 0);
    REQUIRE(prod.coeff(2) == -1);

    const zseries diff =
        prod - zseries::exact(0, {mpz_class(1), mpz_class(0),
                                  mpz_class(-1)});
    REQUIRE(diff.is_exact());
    REQUIRE(diff.is_zero());
}

TEST_CASE("normalization raises valuation over genuine zeros")
{
    const zseries z = series(0, {0, 0, 5}, 3);
    REQUIRE(z.valuation() == 2);
    REQUIRE(z.coeff(0) == 0);
    REQUIRE(z.coeff(2) == 5);

    const zseries w = series(0, {0, 0, 0}, 3);
    REQUIRE(w.is_zero());
    REQUIRE(w.order() == 3);
}

TEST_CASE("shift, inflate, and U(p) windows")
{
    // f = sum_{m=-3}^{6} q^m + O(q^7)
    const zseries f = series(-3, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, 7);

    SECTION("shifted")
    {
        const zseries s = f.shifted(5);
        REQUIRE(s.valuation() == 2);
        REQUIRE(s.order() == 12);
        REQUIRE(s.coeff(2) == 1);
    }

    SECTION("inflated q -> q^s maps [v, N) to [s v, s(N-1)+1)")
    {
        const zseries s = f.inflated(3);
        REQUIRE(s.valuation() == -9);
        REQUIRE(s.order() == 19);
        REQUIRE(s.coeff(-9) == 1);
        REQUIRE(s.coeff(-8) == 0);
        REQUIRE(s.coeff(18) == 1);
    }

    SECTION("U(p) keeps exactly the exponents divisible by p")
    {
        const zseries u = f.u_image(2);
        REQUIRE(u.valuation() == -1);       // ceil(-3/2)
        REQUIRE(u.order() == 4);            // floor(6/2)+1
        for (exp_t m = -1; m < 4; ++m)
            REQUIRE(u.coeff(m) == 1);       // picked from even exponents
    }

    SECTION("U(p) respects non-divisible valuations")
    {
        const zseries g = series(-3, {1, 0, 0, 0, 0, 1}, 3); // q^-3 + q^2
        const zseries u = g.u_image(3);
        REQUIRE(u.valuation() == -1);
        REQUIRE(u.coeff(-1) == 1);
        REQUIRE(u.coeff(0) == 0);
        REQUIRE(u.order() == 1); // floor(2/3)+1
    }
}

TEST_CASE("powers agree with repeated multiplication")
{
    const zseries f = series(-1, {1, 2, 0, -3, 1}, 4);
    zseries acc = zseries::one();
    for (int e = 0; e <= 5; ++e) {
        const zseries p = f.pow(static_cast<unsigned long>(e));
        REQUIRE(p.valuation() == acc.valuation());
        REQUIRE(p.order() == acc.order());
        REQUIRE(agrees(p, acc));
        acc = acc * f;
    }
    REQUIRE(f.pow(0).is_exact());
    REQUIRE(f.pow(0).coeff(0) == 1);
}

TEST_CASE("inverse obeys the window law and reproduces one")
{
    // val v, order N  ->  inverse has val -v, order N - 2v.
    const zseries f = series(1, {1, 4, -2, 7, 1, 1}, 7);
    const zseries inv = f.inverse();
    REQUIRE(inv.valuation() == -1);
    REQUIRE(inv.order() == 5);
    const zseries prod = f * inv;
    REQUIRE(prod.coeff(0) == 1);
    for (exp_t m = 1; m < prod.order(); ++m)
        REQUIRE(prod.coeff(m) == 0);

    SECTION("exact series need an explicit term count")
    {
        const zseries g = zseries::exact(0, {mpz_class(1), mpz_class(-1)});
        const zseries gi = g.inverse(10); // geometric series
        REQUIRE(gi.order() == 10);
        for (exp_t m = 0; m < 10; ++m)
            REQUIRE(gi.coeff(m) == 1);
    }

    SECTION("non-unit leading coefficients are rejected")
    {
        const zseries g = zseries::exact(0, {mpz_class(2), mpz_class(1)});
        REQUIRE_THROWS_AS(g.inverse(5), not_invertible_error);
        REQUIRE_THROWS_AS(zseries::zero_to(5).inverse(3),
                          not_invertible_error);
    }
}

TEST_CASE("ring laws on random windowed series")
{
    std::mt19937_64 rng(0xE87C0FFEEULL);
    std::uniform_int_distribution<int> val_d(-4, 3), len_d(1, 9);

    auto rand_series = [&]() {
        const int len = len_d(rng);
        auto v = random_vector(rng, static_cast<std::size_t>(len), 24, true);
        const int val = val_d(rng);
        return zseries(val, std::move(v), val + len);
    };

    for (int iter = 0; iter < 200; ++iter) {
        const zseries a = rand_series();
        const zseries b = rand_series();
        const zseries c = rand_series();

        const zseries left = (a + b) * c;
        const zseries right = a * c + b * c;
        REQUIRE(left.order() == right.order());
        REQUIRE(agrees(left, right));

        const zseries assoc1 = (a * b) * c;
        const zseries assoc2 = a * (b * c);
        REQUIRE(assoc1.order() == assoc2.order());
        REQUIRE(assoc1.valuation() == assoc2.valuation());
        REQUIRE(agrees(assoc1, assoc2));

        REQUIRE(agrees(a * b, b * a));
        REQUIRE((a - a).is_zero());
    }
}

TEST_CASE("kronecker-substitution convolution is bit-identical to schoolbook")
{
    std::mt19937_64 rng(0x5EEDBA5EULL);

    auto check = [&](std::size_t la, std::size_t lb, int bits, bool neg) {
        const auto a = random_vector(rng, la, bits, neg);
        const auto b = random_vector(rng, lb, bits, neg);
        for (std::size_t out_len :
             {std::size_t{1}, la + lb - 1, (la + lb - 1) / 2 + 1}) {
            std::vector<mpz_class> s, k;
            detail::convolve_schoolbook(a, b, s, out_len);
            detail::convolve_kronecker(a, b, k, out_len);
            REQUIRE(s.size() == k.size());
            for (std::size_t i = 0; i < s.size(); ++i)
                REQUIRE(s[i] == k[i]);
            const auto oracle = mul_naive(a, b, out_len);
            for (std::size_t i = 0; i < s.size(); ++i)
                REQUIRE(s[i] == oracle[i]);
        }
    };

    check(1, 1, 12, false);
    check(3, 17, 30, true);
    check(64, 64, 48, false);
    check(64, 64, 48, true);
    check(200, 31, 96, true);
    check(130, 130, 200, true);

    SECTION("the dispatcher's two paths agree across the threshold")
    {
        for (std::size_t n : {std::size_t{8}, std::size_t{15},
                              std::size_t{16}, std::size_t{17},
                              std::size_t{128}, std::size_t{129}}) {
            const auto a = random_vector(rng, n, 64, true);
            const auto b = random_vector(rng, n + 3, 64, true);
            std::vector<mpz_class> via_dispatch, via_school;
            detail::convolve_into(a, b, via_dispatch, n + 5);
            detail::convolve_schoolbook(a, b, via_school, n + 5);
            REQUIRE(via_dispatch.size() == via_school.size());
            for (std::size_t i = 0; i < via_school.size(); ++i)
                REQUIRE(via_dispatch[i] == via_school[i]);
        }
    }
}

TEST_CASE("scalar operations and equality")
{
    const zseries f = series(-2, {3, 0, 1}, 1);
    const zseries g = mpz_class(-2) * f;
    REQUIRE(g.coeff(-2) == -6);
    REQUIRE(g.coeff(0) == -2);
    REQUIRE(g.order() == f.order());

    REQUIRE(f == f);
    REQUIRE(!(f == g));
    REQUIRE(agrees(f - f, zseries::zero_to(1)));
}
