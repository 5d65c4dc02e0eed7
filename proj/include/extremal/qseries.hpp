#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "convolution.hpp"
#include "errors.hpp"

// Truncated Laurent series in q over an exact coefficient ring.
//
// A series carries a *window* [valuation, order): coefficients are known
// exactly for every exponent in the window, every exponent below the
// valuation is exactly 0, and exponents at or beyond the order are unknown —
// looking one up is a hard error, never a silent zero.  Every arithmetic
// operation computes the largest window on which its result is exactly
// determined by the operands' windows:
//
//   add/sub:   order = min(N1, N2)
//   multiply:  valuation v1+v2, order = min(N1+v2, N2+v1)
//   power n:   valuation n*v,   order = N+(n-1)*v
//   inverse:   valuation -v,    order = N-2v   (N-v known terms)
//   U(p):      valuation ceil(v/p), order = floor((N-1)/p)+1
//
// Exact objects (constants, monomials, Laurent polynomials) carry the
// sentinel order `exact_order`; window arithmetic saturates on it.  A series
// that is zero on its whole window is stored canonically with
// valuation == order and no coefficients.

namespace extremal {

using exp_t = std::int64_t;

// Sentinel order for exact series (constants, monomials, polynomials):
// effectively "known to every exponent".
inline constexpr exp_t exact_order = exp_t{1} << 60;

// Ring glue used by laurent_series<R>.  Each supported coefficient ring
// specializes this; there is deliberately no defaulted primary definition.
template <class R>
struct ring_traits;

template <>
struct ring_traits<mpz_class> {
    static mpz_class zero() { return mpz_class(0); }
    static mpz_class one() { return mpz_class(1); }
    static bool is_zero(const mpz_class& x) { return sgn(x) == 0; }
    static bool is_unit(const mpz_class& x) { return x == 1 || x == -1; }
    // Units of Z are self-inverse.
    static mpz_class unit_inverse(const mpz_class& x) { return x; }
    static void convolve(const std::vector<mpz_class>& a,
                         const std::vector<mpz_class>& b,
                         std::vector<mpz_class>& out, std::size_t out_len)
    {
        detail::convolve_into(a, b, out, out_len);
    }
    static std::string to_string(const mpz_class& x) { return x.get_str(); }
};

namespace detail {

inline exp_t floor_div(exp_t a, exp_t b) // b > 0
{
    exp_t q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0)))
        --q;
    return q;
}

inline exp_t ceil_div(exp_t a, exp_t b) // b > 0
{
    return -floor_div(-a, b);
}

} // namespace detail

template <class R>
class laurent_series {
public:
    using ring = ring_traits<R>;

    // Default-constructed series is the exact zero.
    laurent_series() = default;

    // General window constructor: `coeffs[i]` is the coefficient of
    // q^(val+i), and the series is known through O(q^order).  The stored
    // range must fit inside the window.
    laurent_series(exp_t val, std::vector<R> coeffs, exp_t order)
        : val_(val), order_(order), c_(std::move(coeffs))
    {
        if (order_ < val_ + static_cast<exp_t>(c_.size()))
            throw domain_error("laurent_series: stored coefficients extend "
                               "past the declared order");
        normalize();
    }

    // Exact series (Laurent polynomial): all unstored coefficients are 0.
    static laurent_series exact(exp_t val, std::vector<R> coeffs)
    {
        return laurent_series(val, std::move(coeffs), exact_order);
    }

    // The zero series known through O(q^order).
    static laurent_series zero_to(exp_t order)
    {
        laurent_series s;
        s.val_ = s.order_ = order;
        return s;
    }

    static laurent_series constant(R c) { return exact(0, {std::move(c)}); }
    static laurent_series one() { return constant(ring::one()); }
    static laurent_series monomial(R c, exp_t m)
    {
        return exact(m, {std::move(c)});
    }

    // --- observers ---------------------------------------------------------

    // Lowest exponent with a (possibly) nonzero coefficient.  For a series
    // that is zero on its window this equals order().
    exp_t valuation() const { return val_; }
    exp_t order() const { return order_; }
    bool is_exact() const { return order_ == exact_order; }
    // One past the last stored exponent; every coefficient from here to
    // order() is a logical zero.  Equals valuation() for the zero series.
    exp_t stored_end() const
    {
        return val_ + static_cast<exp_t>(c_.size());
    }
    // Zero on the whole known window.
    bool is_zero() const { return c_.empty(); }
    // Equal to 1 on the whole known window.
    bool is_one_on_window() const
    {
        return c_.size() == 1 && val_ == 0 && c_[0] == ring::one();
    }
    std::size_t term_count() const { return c_.size(); }

    // Exact coefficient of q^m.  Below the valuation the answer is 0; at or
    // beyond the order the coefficient is not determined and the request
    // throws precision_error.
    R coeff(exp_t m) const
    {
        if (m >= order_)
            throw precision_error(
                "coefficient of q^" + std::to_string(m) +
                " requested beyond the known window O(q^" +
                (order_ == exact_order ? std::string("inf")
                                       : std::to_string(order_)) +
                ")");
        if (m < val_)
            return ring::zero();
        const auto idx = static_cast<std::size_t>(m - val_);
        return idx < c_.size() ? c_[idx] : ring::zero();
    }

    // --- ring operations ----------------------------------------------------

    friend laurent_series operator+(const laurent_series& a,
                                    const laurent_series& b)
    {
        return add_scaled(a, b, false);
    }

    friend laurent_series operator-(const laurent_series& a,
                                    const laurent_series& b)
    {
        return add_scaled(a, b, true);
    }

    laurent_series operator-() const
    {
        laurent_series r(*this);
        for (auto& x : r.c_)
            x = -x;
        return r;
    }

    friend laurent_series operator*(const R& s, const laurent_series& a)
    {
        if (ring::is_zero(s))
            return zero_to(a.order_);
        std::vector<R> c(a.c_);
        for (auto& x : c)
            x = x * s;
        return laurent_series(a.val_, std::move(c), a.order_);
    }

    friend laurent_series operator*(const laurent_series& a, const R& s)
    {
        return s * a;
    }

    friend laurent_series operator*(const laurent_series& a,
                                    const laurent_series& b)
    {
        const exp_t order =
            std::min(sat_add(a.order_, b.val_), sat_add(b.order_, a.val_));
        if (a.c_.empty() || b.c_.empty())
            return zero_to(order);
        const exp_t val = a.val_ + b.val_;
        const std::size_t full = a.c_.size() + b.c_.size() - 1;
        std::size_t out_len = full;
        if (order != exact_order) {
            if (order <= val)
                return zero_to(order);
            out_len = std::min<std::size_t>(
                full, static_cast<std::size_t>(order - val));
        }
        std::vector<R> c;
        ring::convolve(a.c_, b.c_, c, out_len);
        return laurent_series(val, std::move(c), order);
    }

    laurent_series& operator+=(const laurent_series& o)
    {
        return *this = *this + o;
    }
    laurent_series& operator-=(const laurent_series& o)
    {
        return *this = *this - o;
    }
    laurent_series& operator*=(const laurent_series& o)
    {
        return *this = *this * o;
    }

    // f^n for n >= 0, by binary powering; f^0 is the exact 1.  The window
    // composes to order N+(n-1)v regardless of the multiplication order.
    laurent_series pow(unsigned long n) const
    {
        laurent_series acc = one();
        laurent_series base = *this;
        while (n > 0) {
            if (n & 1UL)
                acc = acc * base;
            n >>= 1UL;
            if (n > 0)
                base = base * base;
        }
        return acc;
    }

    // Multiply by q^m.
    laurent_series shifted(exp_t m) const
    {
        laurent_series r(*this);
        r.order_ = sat_add(r.order_, m);
        if (r.c_.empty())
            r.val_ = r.order_;
        else
            r.val_ += m;
        return r;
    }

    // Substitute q -> q^s (s >= 1): exponents scale by s, the in-between
    // coefficients are known zeros, so the window becomes
    // [s*v, s*(N-1)+1).
    laurent_series inflated(exp_t s) const
    {
        if (s < 1)
            throw domain_error("inflated: scale must be >= 1");
        if (s == 1)
            return *this;
        laurent_series r;
        r.order_ = is_exact() ? exact_order : s * (order_ - 1) + 1;
        if (c_.empty()) {
            r.val_ = is_exact() ? exact_order : r.order_;
            return r;
        }
        r.val_ = s * val_;
        r.c_.assign(s * (c_.size() - 1) + 1, ring::zero());
        for (std::size_t i = 0; i < c_.size(); ++i)
            r.c_[s * i] = c_[i];
        r.normalize();
        return r;
    }

    // Restrict the window: forget everything at or beyond new_order.
    // Widening a window is impossible and throws.
    laurent_series truncated(exp_t new_order) const
    {
        if (new_order > order_)
            throw precision_error(
                "truncated: cannot widen a window from O(q^" +
                std::to_string(order_) + ") to O(q^" +
                std::to_string(new_order) + ")");
        laurent_series r;
        r.order_ = new_order;
        r.val_ = std::min(val_, new_order);
        if (r.val_ < new_order) {
            const auto keep = static_cast<std::size_t>(
                std::min<exp_t>(static_cast<exp_t>(c_.size()),
                                new_order - r.val_));
            r.c_.assign(c_.begin(), c_.begin() + keep);
        }
        r.normalize();
        return r;
    }

    // Atkin U(p): picks every p-th coefficient, a(n) -> a(pn).  The window
    // contracts by a factor p: [ceil(v/p), floor((N-1)/p)+1).
    laurent_series u_image(exp_t p) const
    {
        if (p < 1)
            throw domain_error("u_image: p must be >= 1");
        laurent_series r;
        r.order_ = is_exact()
                       ? exact_order
                       : detail::floor_div(order_ - 1, p) + 1;
        if (c_.empty()) {
            r.val_ = is_exact() ? exact_order : r.order_;
            return r;
        }
        r.val_ = detail::ceil_div(val_, p);
        const exp_t stored_hi =
            detail::floor_div(val_ + static_cast<exp_t>(c_.size()) - 1, p);
        if (stored_hi >= r.val_) {
            r.c_.reserve(static_cast<std::size_t>(stored_hi - r.val_ + 1));
            for (exp_t n = r.val_; n <= stored_hi; ++n)
                r.c_.push_back(c_[static_cast<std::size_t>(n * p - val_)]);
        }
        r.normalize();
        return r;
    }

    // Multiplicative inverse on the window.  Requires a unit leading
    // coefficient (over Z: +-1).  For a series with window [v, N) the
    // result has window [-v, N-2v), i.e. the same number N-v of known
    // terms.  Exact series have no intrinsic truncation, so they must use
    // the explicit-term-count overload.
    laurent_series inverse() const
    {
        if (is_exact())
            throw precision_error(
                "inverse: an exact series has no intrinsic window; "
                "use inverse(terms)");
        return inverse_impl(static_cast<std::size_t>(order_ - val_));
    }

    laurent_series inverse(std::size_t terms) const
    {
        if (!is_exact())
            terms = std::min<std::size_t>(
                terms, static_cast<std::size_t>(order_ - val_));
        return inverse_impl(terms);
    }

    // --- comparisons --------------------------------------------------------

    // Identical window and identical coefficients.
    friend bool operator==(const laurent_series& a, const laurent_series& b)
    {
        return a.val_ == b.val_ && a.order_ == b.order_ && a.c_ == b.c_;
    }
    friend bool operator!=(const laurent_series& a, const laurent_series& b)
    {
        return !(a == b);
    }

    // Equality of coefficients on the overlap of the two known windows.
    friend bool agrees(const laurent_series& a, const laurent_series& b)
    {
        return (a - b).is_zero();
    }

    // Human-readable rendering, mostly for diagnostics and text output.
    std::string str(const std::string& var = "q") const
    {
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (ring::is_zero(c_[i]))
                continue;
            if (!out.empty())
                out += " + ";
            const exp_t e = val_ + static_cast<exp_t>(i);
            out += ring::to_string(c_[i]);
            if (e != 0)
                out += "*" + var + "^" + std::to_string(e);
        }
        if (out.empty())
            out = "0";
        if (!is_exact())
            out += " + O(" + var + "^" + std::to_string(order_) + ")";
        return out;
    }

private:
    exp_t val_ = exact_order;
    exp_t order_ = exact_order;
    std::vector<R> c_; // c_[i] = coefficient of q^(val_+i)

    static exp_t sat_add(exp_t order, exp_t shift)
    {
        return order == exact_order ? exact_order : order + shift;
    }

    // Canonical form: the leading stored coefficient is nonzero (leading
    // zeros raise the valuation — they are genuine zeros), trailing zeros
    // are trimmed from storage (they remain logical zeros up to order_),
    // and a series with no nonzero stored coefficient collapses to
    // valuation == order.
    void normalize()
    {
        while (!c_.empty() && ring::is_zero(c_.back()))
            c_.pop_back();
        std::size_t lead = 0;
        while (lead < c_.size() && ring::is_zero(c_[lead]))
            ++lead;
        if (lead > 0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
            val_ += static_cast<exp_t>(lead);
        }
        if (c_.empty())
            val_ = order_;
    }

    static laurent_series add_scaled(const laurent_series& a,
                                     const laurent_series& b, bool subtract)
    {
        const exp_t order = std::min(a.order_, b.order_);
        // Stored data exists only on [lo, hi); a series with empty storage
        // contributes nothing (this also covers the exact zero, whose
        // valuation is the sentinel).
        exp_t lo, hi;
        if (a.c_.empty() && b.c_.empty())
            return zero_to(order);
        if (a.c_.empty()) {
            lo = b.val_;
            hi = b.stored_end();
        } else if (b.c_.empty()) {
            lo = a.val_;
            hi = a.stored_end();
        } else {
            lo = std::min(a.val_, b.val_);
            hi = std::max(a.stored_end(), b.stored_end());
        }
        hi = std::min(hi, order);
        lo = std::min(lo, hi);
        std::vector<R> c;
        c.reserve(static_cast<std::size_t>(hi - lo));
        for (exp_t m = lo; m < hi; ++m) {
            R x = a.coeff(m);
            if (subtract)
                x = x - b.coeff(m);
            else
                x = x + b.coeff(m);
            c.push_back(std::move(x));
        }
        return laurent_series(lo, std::move(c), order);
    }

    laurent_series inverse_impl(std::size_t nterms) const
    {
        if (c_.empty())
            throw not_invertible_error("inverse: series is zero on its window");
        if (!ring::is_unit(c_.front()))
            throw not_invertible_error(
                "inverse: leading coefficient " + ring::to_string(c_.front()) +
                " is not a unit of the coefficient ring");
        if (nterms == 0)
            throw precision_error("inverse: empty target window");
        // f = q^v * u with u = u0(1 + ...); compute w = u^{-1} term by term:
        //   w_0 = u0^{-1},   w_k = -u0^{-1} * sum_{j=1..k} u_j w_{k-j}.
        const R u0inv = ring::unit_inverse(c_.front());
        std::vector<R> w(nterms, ring::zero());
        w[0] = u0inv;
        for (std::size_t k = 1; k < nterms; ++k) {
            R acc = ring::zero();
            const std::size_t jmax = std::min(k, c_.size() - 1);
            for (std::size_t j = 1; j <= jmax; ++j)
                acc += c_[j] * w[k - j]; // mpz_addmul under gmpxx
            w[k] = -(u0inv * acc);
        }
        const exp_t rv = -val_;
        return laurent_series(rv, std::move(w),
                              rv + static_cast<exp_t>(nterms));
    }
};

// The universal carrier: truncated Laurent q-series over Z.
using zseries = laurent_series<mpz_class>;

} // namespace extremal
