#pragma once

#include <set>
#include <tuple>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"

// Positive-definite integral binary quadratic forms [a, b, c] of negative
// discriminant, Gauss reduction, and the enumeration of the marked family
//   F_D = { [a,b,c] : 6 | a, a > 0, b == 1 (mod 12), b^2 - 4ac = D },
// one representative per class, certified complete by the reduced-form
// class count.

namespace extremal {

struct heegner_form {
    long a = 0, b = 0, c = 0;

    long discriminant() const { return b * b - 4 * a * c; }

    friend bool operator==(const heegner_form& x, const heegner_form& y)
    {
        return x.a == y.a && x.b == y.b && x.c == y.c;
    }
    friend bool operator<(const heegner_form& x, const heegner_form& y)
    {
        return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
    }
};

namespace detail {

inline long floor_div_long(long x, long y)
{
    long q = x / y;
    if ((x % y != 0) && ((x < 0) != (y < 0)))
        --q;
    return q;
}

} // namespace detail

// Gauss reduction to the canonical domain -a < b <= a <= c, with b >= 0
// when a == c.  Pure SL2(Z) moves: translations and the inversion swap.
inline heegner_form sl2_reduce(heegner_form f)
{
    if (f.a <= 0 || f.discriminant() >= 0)
        throw domain_error("sl2_reduce: form must be positive definite");
    const long D = f.discriminant();
    for (;;) {
        // Translate b into (-a, a]: with r := a - b = 2a*s + rho,
        // rho in [0, 2a), the shifted b + 2a*s = a - rho lands inside.
        const long shift = detail::floor_div_long(f.a - f.b, 2 * f.a);
        f.b += 2 * f.a * shift;
        f.c = (f.b * f.b - D) / (4 * f.a);
        if (f.a > f.c) {
            // (a, b, c) -> (c, -b, a)
            std::swap(f.a, f.c);
            f.b = -f.b;
            continue;
        }
        break;
    }
    if (f.a == f.c && f.b < 0)
        f.b = -f.b;
    return f;
}

// All reduced forms of discriminant D < 0 (imprimitive ones included),
// in lexicographic (a, b) order.  Serves as the class-count oracle the
// marked enumeration is certified against.
inline std::vector<heegner_form> reduced_forms(long D)
{
    if (D >= 0)
        throw domain_error("reduced_forms: discriminant must be negative");
    std::vector<heegner_form> out;
    for (long a = 1; 3 * a * a <= -D; ++a) {
        for (long b = -a + 1; b <= a; ++b) {
            const long num = b * b - D;
            if (num % (4 * a) != 0)
                continue;
            const long c = num / (4 * a);
            if (c < a)
                continue;
            if (a == c && b < 0)
                continue;
            out.push_back({a, b, c});
        }
    }
    return out;
}

inline long class_number_oracle(long D)
{
    return static_cast<long>(reduced_forms(D).size());
}

// One representative per class of the marked family of discriminant
// D = 1 - 24n, chosen with the smallest a found (ascending scan), which
// maximizes Im tau_Q = sqrt(|D|)/(2a) and so the numerical convergence
// at that point.  Completeness is certified by matching the reduced-form
// class count: distinct reduced images are SL2-inequivalent, hence
// inequivalent under the smaller marked-form symmetry group, and the
// class counts agree.
inline std::vector<heegner_form> enumerate_forms(long n)
{
    if (n < 1)
        throw domain_error("enumerate_forms: n must be >= 1");
    const long D = 1 - 24 * n;
    const long target = class_number_oracle(D);
    std::vector<heegner_form> reps;
    std::set<heegner_form> seen;

    const long a_cap = 24 * (-D); // generous; scan is cheap
    for (long a = 6; a <= a_cap; a += 6) {
        // b == 1 (mod 12) inside (-a, a]; 12 | 2a keeps the window exact.
        long b0 = 1 - 12 * detail::floor_div_long(a - 1 + 12, 12);
        while (b0 <= -a)
            b0 += 12;
        for (long b = b0; b <= a; b += 12) {
            const long num = b * b - D;
            if (num % (4 * a) != 0)
                continue;
            const heegner_form f{a, b, num / (4 * a)};
            const heegner_form key = sl2_reduce(f);
            if (seen.insert(key).second) {
                reps.push_back(f);
                if (static_cast<long>(reps.size()) == target)
                    return reps;
            }
        }
    }
    throw enumeration_error(
        "enumerate_forms: class count not reached within the scan cap");
}

} // namespace extremal
