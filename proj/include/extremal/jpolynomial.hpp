#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "convolution.hpp"
#include "errors.hpp"
#include "qseries.hpp"

// Exact integer polynomials in one formal variable X, with X standing for
// the elliptic modular invariant j.  Carrier for Faber polynomials and for
// the polynomial form of the extremal functions; also usable as the
// coefficient ring of a laurent_series (for the two-variable generating
// series of the Faber polynomials).

namespace extremal {

class jpolynomial {
public:
    jpolynomial() = default;
    explicit jpolynomial(long v) : c_{mpz_class(v)} { normalize(); }
    explicit jpolynomial(mpz_class v) : c_{std::move(v)} { normalize(); }
    explicit jpolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs))
    {
        normalize();
    }

    static jpolynomial variable() { return monomial(1, 1); }
    static jpolynomial monomial(mpz_class coeff, std::size_t e)
    {
        std::vector<mpz_class> c(e + 1);
        c[e] = std::move(coeff);
        return jpolynomial(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    // Coefficient of X^i (0 beyond the degree).
    mpz_class coeff(std::size_t i) const
    {
        return i < c_.size() ? c_[i] : mpz_class(0);
    }

    const mpz_class& leading() const
    {
        if (c_.empty())
            throw domain_error("jpolynomial: zero polynomial has no leading "
                               "coefficient");
        return c_.back();
    }

    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    const std::vector<mpz_class>& coefficients() const { return c_; }

    friend jpolynomial operator+(const jpolynomial& a, const jpolynomial& b)
    {
        std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = a.coeff(i) + b.coeff(i);
        return jpolynomial(std::move(c));
    }

    friend jpolynomial operator-(const jpolynomial& a, const jpolynomial& b)
    {
        std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = a.coeff(i) - b.coeff(i);
        return jpolynomial(std::move(c));
    }

    jpolynomial operator-() const
    {
        jpolynomial r(*this);
        for (auto& x : r.c_)
            x = -x;
        return r;
    }

    friend jpolynomial operator*(const jpolynomial& a, const jpolynomial& b)
    {
        if (a.c_.empty() || b.c_.empty())
            return jpolynomial();
        std::vector<mpz_class> c;
        detail::convolve_into(a.c_, b.c_, c, a.c_.size() + b.c_.size() - 1);
        return jpolynomial(std::move(c));
    }

    friend jpolynomial operator*(const mpz_class& s, const jpolynomial& a)
    {
        jpolynomial r(a);
        for (auto& x : r.c_)
            x *= s;
        r.normalize();
        return r;
    }

    jpolynomial& operator+=(const jpolynomial& o) { return *this = *this + o; }
    jpolynomial& operator-=(const jpolynomial& o) { return *this = *this - o; }
    jpolynomial& operator*=(const jpolynomial& o) { return *this = *this * o; }

    friend bool operator==(const jpolynomial& a, const jpolynomial& b)
    {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const jpolynomial& a, const jpolynomial& b)
    {
        return !(a == b);
    }

    // P(Y + t): re-express the polynomial in the shifted variable (used to
    // pass between the X = j form and the J = j - 744 form).  Horner on the
    // linear factor keeps this exact and O(deg^2).
    jpolynomial shift_variable(const mpz_class& t) const
    {
        jpolynomial r;
        for (std::size_t i = c_.size(); i-- > 0;) {
            // r = r*(Y + t) + c_[i]
            jpolynomial next = monomial(1, 1) * r + t * r;
            next += jpolynomial(c_[i]);
            r = std::move(next);
        }
        return r;
    }

    // Evaluate at a q-series argument by Horner's rule.
    template <class R>
    laurent_series<R> evaluate(const laurent_series<R>& x) const
    {
        if (c_.empty())
            return laurent_series<R>(); // exact zero
        auto r = laurent_series<R>::constant(R(c_.back()));
        for (std::size_t i = c_.size() - 1; i-- > 0;) {
            r = r * x;
            r += laurent_series<R>::constant(R(c_[i]));
        }
        return r;
    }

    std::string str(const std::string& var = "X") const
    {
        if (c_.empty())
            return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (sgn(c_[i]) == 0)
                continue;
            if (!out.empty())
                out += " + ";
            out += c_[i].get_str();
            if (i > 0)
                out += "*" + var + (i > 1 ? "^" + std::to_string(i) : "");
        }
        return out;
    }

private:
    std::vector<mpz_class> c_; // c_[i] = coefficient of X^i; no trailing zeros

    void normalize()
    {
        while (!c_.empty() && sgn(c_.back()) == 0)
            c_.pop_back();
    }
};

// Ring glue so laurent_series<jpolynomial> works (series in q whose
// coefficients are integer polynomials in X).
template <>
struct ring_traits<jpolynomial> {
    static jpolynomial zero() { return jpolynomial(); }
    static jpolynomial one() { return jpolynomial(1); }
    static bool is_zero(const jpolynomial& x) { return x.is_zero(); }
    static bool is_unit(const jpolynomial& x)
    {
        return x.degree() == 0 && (x.coeff(0) == 1 || x.coeff(0) == -1);
    }
    static jpolynomial unit_inverse(const jpolynomial& x) { return x; }
    static void convolve(const std::vector<jpolynomial>& a,
                         const std::vector<jpolynomial>& b,
                         std::vector<jpolynomial>& out, std::size_t out_len)
    {
        detail::convolve_generic(a, b, out, out_len);
    }
    static std::string to_string(const jpolynomial& x)
    {
        return "(" + x.str() + ")";
    }
};

// Series in q with polynomial coefficients.
using xseries = laurent_series<jpolynomial>;

} // namespace extremal
