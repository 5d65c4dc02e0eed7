// Eta products, Eisenstein series, and partition generating functions,
// checked against test-local oracles: direct partition-counting dynamic
// programs and naive dense polynomial products.

#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include <extremal/errors.hpp>
#include <extremal/qseries.hpp>
#include <extremal/series_core.hpp>

using namespace extremal;

namespace {

// Oracle: number of partitions of n with all parts >= min_part, by the
// classic coin-change dynamic program (independent of any recurrence the
// library uses).
std::vector<mpz_class> partition_oracle(int n_max, int min_part)
{
    std::vector<mpz_class> ways(static_cast<std::size_t>(n_max) + 1);
    ways[0] = 1;
    for (int part = min_part; part <= n_max; ++part)
        for (int s = part; s <= n_max; ++s)
            ways[static_cast<std::size_t>(s)] +=
                ways[static_cast<std::size_t>(s - part)];
    return ways;
}

// Oracle: dense product of (1 - q^n)^e over n = 1..N-1, coefficients kept
// through q^{N-1}, naive multiplication only.
std::vector<mpz_class> eta_block_oracle(int N, int e)
{
    std::vector<mpz_class> acc(static_cast<std::size_t>(N));
    acc[0] = 1;
    for (int n = 1; n < N; ++n)
        for (int rep = 0; rep < e; ++rep) {
            std::vector<mpz_class> next(static_cast<std::size_t>(N));
            for (int i = 0; i < N; ++i) {
                if (sgn(acc[static_cast<std::size_t>(i)]) == 0)
                    continue;
                next[static_cast<std::size_t>(i)] +=
                    acc[static_cast<std::size_t>(i)];
                if (i + n < N)
                    next[static_cast<std::size_t>(i + n)] -=
                        acc[static_cast<std::size_t>(i)];
            }
            acc = std::move(next);
        }
    return acc;
}

long divisor_power_sum(long n, unsigned r)
{
    long s = 0;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) {
            long p = 1;
            for (unsigned i = 0; i < r; ++i)
                p *= d;
            s += p;
        }
    return s;
}

} // namespace

TEST_CASE("sigma series against direct divisor sums")
{
    for (unsigned r : {1u, 3u, 5u, 13u}) {
        const zseries s = sigma_series(r, 20);
        REQUIRE(s.valuation() == 1);
        REQUIRE(s.order() == 20);
        for (long n = 1; n < 20; ++n)
            REQUIRE(s.coeff(n) == divisor_power_sum(n, r));
    }
}

TEST_CASE("euler phi series equals the naive product")
{
    const int N = 40;
    const zseries phi = euler_phi_series(N);
    const auto oracle = eta_block_oracle(N, 1);
    REQUIRE(phi.valuation() == 0);
    REQUIRE(phi.order() == N);
    for (int m = 0; m < N; ++m)
        REQUIRE(phi.coeff(m) == oracle[static_cast<std::size_t>(m)]);
}

TEST_CASE("partition numbers match the dynamic-programming oracle")
{
    const partition_table pt = partition_numbers(30);
    const auto oracle = partition_oracle(30, 1);
    for (int n = 0; n <= 30; ++n)
        REQUIRE(pt.at(n) == oracle[static_cast<std::size_t>(n)]);
    REQUIRE(pt.at(-1) == 0);
    REQUIRE(pt.at(-100) == 0);
}

TEST_CASE("partition generating function inverts the phi series")
{
    const int N = 25;
    const zseries gen = euler_phi_series(N).inverse();
    const partition_table pt = partition_numbers(N - 1);
    for (int n = 0; n < N; ++n)
        REQUIRE(gen.coeff(n) == pt.at(n));
}

TEST_CASE("restricted partitions (parts >= 2) against the oracle")
{
    const int N = 25;
    const zseries r = restricted_partition_series(N);
    const auto oracle = partition_oracle(N - 1, 2);
    for (int n = 0; n < N; ++n)
        REQUIRE(r.coeff(n) == oracle[static_cast<std::size_t>(n)]);
}

TEST_CASE("delta series: leading window and the naive 24th-power oracle")
{
    const int N = 30;
    const zseries del = delta_series(N);
    REQUIRE(del.valuation() == 1);
    REQUIRE(del.order() == N);
    REQUIRE(del.coeff(1) == 1);
    REQUIRE(del.coeff(2) == -24);
    REQUIRE(del.coeff(3) == 252);
    REQUIRE(del.coeff(4) == -1472);

    const auto block = eta_block_oracle(N - 1, 24); // q^{-1} Delta
    for (int m = 1; m < N; ++m)
        REQUIRE(del.coeff(m) == block[static_cast<std::size_t>(m - 1)]);
}

TEST_CASE("eta products validate their fractional-power bookkeeping")
{
    REQUIRE_THROWS_AS(eta_product({{1, 1}}, 10), eta_product_error);
    REQUIRE_THROWS_AS(eta_product({{2, 3}, {3, 1}}, 10), eta_product_error);

    // eta(t)^2 eta(2t)^2 eta(3t)^2 eta(6t)^2: prefactor q^{24/24} = q.
    const zseries level6 = eta_product({{1, 2}, {2, 2}, {3, 2}, {6, 2}}, 12);
    REQUIRE(level6.valuation() == 1);
    REQUIRE(level6.order() == 12);
    REQUIRE(level6.coeff(1) == 1);

    // Oracle for the same block by naive products.
    const int N = 11;
    std::vector<mpz_class> acc(static_cast<std::size_t>(N));
    acc[0] = 1;
    for (long mfac : {1L, 2L, 3L, 6L}) {
        const auto blk = eta_block_oracle(N, 2);
        std::vector<mpz_class> infl(static_cast<std::size_t>(N));
        for (int i = 0; i < N; ++i)
            if (static_cast<long>(i) * mfac < N)
                infl[static_cast<std::size_t>(i * mfac)] =
                    blk[static_cast<std::size_t>(i)];
        std::vector<mpz_class> next(static_cast<std::size_t>(N));
        for (int i = 0; i < N; ++i)
            for (int j = 0; i + j < N; ++j)
                next[static_cast<std::size_t>(i + j)] +=
                    acc[static_cast<std::size_t>(i)] *
                    infl[static_cast<std::size_t>(j)];
        acc = std::move(next);
    }
    for (int m = 1; m < 12; ++m)
        REQUIRE(level6.coeff(m) == acc[static_cast<std::size_t>(m - 1)]);

    SECTION("negative exponents produce honest Laurent windows")
    {
        // 1/Delta = q^{-1} prod (1-q^n)^{-24}; its coefficients count
        // partitions into parts of 24 colors, shifted by the pole.
        const int M = 8;
        const zseries inv_delta = eta_product({{1, -24}}, M);
        REQUIRE(inv_delta.valuation() == -1);
        REQUIRE(inv_delta.order() == M);

        std::vector<mpz_class> colored(static_cast<std::size_t>(M) + 2);
        colored[0] = 1;
        for (int n = 1; n <= M + 1; ++n)
            for (int rep = 0; rep < 24; ++rep)
                for (int s = n; s <= M + 1; ++s)
                    colored[static_cast<std::size_t>(s)] +=
                        colored[static_cast<std::size_t>(s - n)];
        for (int m = -1; m < M; ++m)
            REQUIRE(inv_delta.coeff(m) ==
                    colored[static_cast<std::size_t>(m + 1)]);
    }
}

TEST_CASE("Eisenstein E2 has the right first coefficients")
{
    const zseries e2 = e2_series(10);
    REQUIRE(e2.coeff(0) == 1);
    REQUIRE(e2.coeff(1) == -24);
    REQUIRE(e2.coeff(2) == -72);
    REQUIRE(e2.coeff(3) == -96);
    REQUIRE(e2.coeff(4) == -168);
}
