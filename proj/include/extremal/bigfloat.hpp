#pragma once

#include <string>
#include <utility>

#include <gmpxx.h>
#include <mpfr.h>

#include "errors.hpp"

// Thin RAII layer over MPFR.  Every value carries its own precision;
// binary operations round to the larger operand precision, always with
// MPFR_RNDN, so a computation's precision is decided once at the top and
// flows through deterministically.

namespace extremal {

class big_real {
public:
    explicit big_real(mpfr_prec_t prec)
    {
        check_prec(prec);
        mpfr_init2(x_, prec);
        mpfr_set_zero(x_, 1);
    }
    big_real(long v, mpfr_prec_t prec)
    {
        check_prec(prec);
        mpfr_init2(x_, prec);
        mpfr_set_si(x_, v, MPFR_RNDN);
    }
    big_real(const mpz_class& v, mpfr_prec_t prec)
    {
        check_prec(prec);
        mpfr_init2(x_, prec);
        mpfr_set_z(x_, v.get_mpz_t(), MPFR_RNDN);
    }

    big_real(const big_real& o)
    {
        mpfr_init2(x_, o.prec());
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    big_real(big_real&& o) noexcept
    {
        mpfr_init2(x_, o.prec());
        mpfr_swap(x_, o.x_);
    }
    big_real& operator=(const big_real& o)
    {
        if (this != &o) {
            mpfr_set_prec(x_, o.prec());
            mpfr_set(x_, o.x_, MPFR_RNDN);
        }
        return *this;
    }
    big_real& operator=(big_real&& o) noexcept
    {
        if (this != &o)
            mpfr_swap(x_, o.x_);
        return *this;
    }
    ~big_real() { mpfr_clear(x_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(x_); }
    const mpfr_t& raw() const { return x_; }

    static big_real pi(mpfr_prec_t prec)
    {
        big_real r(prec);
        mpfr_const_pi(r.x_, MPFR_RNDN);
        return r;
    }

    friend big_real operator+(const big_real& a, const big_real& b)
    {
        big_real r(std::max(a.prec(), b.prec()));
        mpfr_add(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend big_real operator-(const big_real& a, const big_real& b)
    {
        big_real r(std::max(a.prec(), b.prec()));
        mpfr_sub(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend big_real operator*(const big_real& a, const big_real& b)
    {
        big_real r(std::max(a.prec(), b.prec()));
        mpfr_mul(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend big_real operator/(const big_real& a, const big_real& b)
    {
        big_real r(std::max(a.prec(), b.prec()));
        mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    big_real operator-() const
    {
        big_real r(prec());
        mpfr_neg(r.x_, x_, MPFR_RNDN);
        return r;
    }

    big_real& operator+=(const big_real& o) { return *this = *this + o; }
    big_real& operator-=(const big_real& o) { return *this = *this - o; }
    big_real& operator*=(const big_real& o) { return *this = *this * o; }
    big_real& operator/=(const big_real& o) { return *this = *this / o; }

    big_real mul_si(long v) const
    {
        big_real r(prec());
        mpfr_mul_si(r.x_, x_, v, MPFR_RNDN);
        return r;
    }
    big_real div_si(long v) const
    {
        if (v == 0)
            throw domain_error("big_real: division by zero");
        big_real r(prec());
        mpfr_div_si(r.x_, x_, v, MPFR_RNDN);
        return r;
    }
    big_real mul_z(const mpz_class& v) const
    {
        big_real r(prec());
        mpfr_mul_z(r.x_, x_, v.get_mpz_t(), MPFR_RNDN);
        return r;
    }

    big_real sqrt() const
    {
        if (sign() < 0)
            throw domain_error("big_real: sqrt of a negative value");
        big_real r(prec());
        mpfr_sqrt(r.x_, x_, MPFR_RNDN);
        return r;
    }
    big_real abs() const
    {
        big_real r(prec());
        mpfr_abs(r.x_, x_, MPFR_RNDN);
        return r;
    }
    // x^(3/4), used for the 1/(24n-1)^(3/4) prefactor.
    big_real pow_3_4() const
    {
        return (*this * this->sqrt()).sqrt();
    }
    big_real exp() const
    {
        big_real r(prec());
        mpfr_exp(r.x_, x_, MPFR_RNDN);
        return r;
    }

    std::pair<big_real, big_real> sin_cos() const
    {
        std::pair<big_real, big_real> r{big_real(prec()), big_real(prec())};
        mpfr_sin_cos(r.first.x_, r.second.x_, x_, MPFR_RNDN);
        return r;
    }
    std::pair<big_real, big_real> sinh_cosh() const
    {
        std::pair<big_real, big_real> r{big_real(prec()), big_real(prec())};
        mpfr_sinh_cosh(r.first.x_, r.second.x_, x_, MPFR_RNDN);
        return r;
    }

    int sign() const { return mpfr_sgn(x_); }
    bool is_zero() const { return mpfr_zero_p(x_); }
    int cmp(const big_real& o) const { return mpfr_cmp(x_, o.x_); }
    int cmp_d(double v) const { return mpfr_cmp_d(x_, v); }
    // 2^e bound: true iff |x| < 2^e.
    bool abs_less_2exp(long e) const
    {
        if (mpfr_zero_p(x_))
            return true;
        return mpfr_get_exp(x_) <= e;
    }

    mpz_class round_to_int() const
    {
        mpz_class z;
        mpfr_get_z(z.get_mpz_t(), x_, MPFR_RNDN);
        return z;
    }
    // |x - nearest integer|, the integrality gate margin.
    big_real dist_to_int() const
    {
        const mpz_class z = round_to_int();
        return (*this - big_real(z, prec())).abs();
    }

    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

    // Deterministic decimal rendering with the given significant digits.
    std::string str(int digits = 20) const
    {
        char* s = nullptr;
        // %.*Rg is deterministic for a fixed precision and value.
        if (mpfr_asprintf(&s, "%.*Rg", digits, x_) < 0)
            throw error("big_real: formatting failed");
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

private:
    static void check_prec(mpfr_prec_t prec)
    {
        if (prec < MPFR_PREC_MIN || prec > (mpfr_prec_t{1} << 30))
            throw domain_error("big_real: precision out of range");
    }

    mpfr_t x_;
};

// Minimal complex pair; only what the Kloosterman sums and CM traces use.
struct big_complex {
    big_real re, im;

    explicit big_complex(mpfr_prec_t prec) : re(prec), im(prec) {}
    big_complex(big_real r, big_real i)
        : re(std::move(r)), im(std::move(i))
    {
    }

    friend big_complex operator+(const big_complex& a, const big_complex& b)
    {
        return {a.re + b.re, a.im + b.im};
    }
    friend big_complex operator-(const big_complex& a, const big_complex& b)
    {
        return {a.re - b.re, a.im - b.im};
    }
    friend big_complex operator*(const big_complex& a, const big_complex& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    big_complex scaled(const big_real& s) const
    {
        return {re * s, im * s};
    }
    big_complex& operator+=(const big_complex& o)
    {
        re += o.re;
        im += o.im;
        return *this;
    }
};

} // namespace extremal
