#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"
#include "qseries.hpp"

// Truncated Laurent series over Z/mZ for a word-sized modulus m < 2^32.
// Same window semantics as laurent_series (see qseries.hpp); kept separate
// because residues multiply without allocation and the congruence checks
// touch windows of ~10^4 terms where mpz arithmetic would be pure waste.

namespace extremal {

class residue_series {
public:
    residue_series(std::uint64_t modulus, exp_t val,
                   std::vector<std::uint64_t> coeffs, exp_t order)
        : m_(modulus), val_(val), c_(std::move(coeffs)), order_(order)
    {
        check_modulus(m_);
        if (order_ != exact_order &&
            c_.size() != static_cast<std::size_t>(order_ - val_))
            throw domain_error("residue_series: storage does not match the "
                               "window");
        for (auto& x : c_)
            x %= m_;
        normalize();
    }

    static residue_series zero_to(std::uint64_t modulus, exp_t order)
    {
        check_modulus(modulus);
        return residue_series(modulus, order, {}, order, tag{});
    }

    // Reduce an integer series coefficientwise; the window is preserved.
    static residue_series reduce(const zseries& f, std::uint64_t modulus)
    {
        check_modulus(modulus);
        const exp_t hi =
            f.order() == exact_order ? f.stored_end() : f.order();
        std::vector<std::uint64_t> c;
        c.reserve(static_cast<std::size_t>(hi - f.valuation()));
        for (exp_t m = f.valuation(); m < hi; ++m)
            c.push_back(mod_of(f.coeff(m), modulus));
        return residue_series(modulus, f.valuation(), std::move(c),
                              f.order(), tag{});
    }

    std::uint64_t modulus() const { return m_; }
    exp_t valuation() const { return val_; }
    exp_t order() const { return order_; }
    bool is_zero() const { return c_.empty(); }

    std::uint64_t coeff(exp_t m) const
    {
        if (m >= order_)
            throw precision_error("residue_series: coefficient requested "
                                  "beyond the known window");
        if (m < val_ || static_cast<std::size_t>(m - val_) >= c_.size())
            return 0;
        return c_[static_cast<std::size_t>(m - val_)];
    }

    residue_series truncated(exp_t new_order) const
    {
        if (new_order > order_)
            throw precision_error("residue_series: cannot widen a window");
        if (new_order <= val_)
            return zero_to(m_, new_order);
        std::vector<std::uint64_t> c(
            c_.begin(),
            c_.begin() + std::min<std::size_t>(
                             c_.size(),
                             static_cast<std::size_t>(new_order - val_)));
        return residue_series(m_, val_, std::move(c), new_order, tag{});
    }

    // q -> q^s; window [val, N) becomes [s*val, s*(N-1)+1).
    residue_series inflated(long s) const
    {
        if (s < 1)
            throw domain_error("residue_series: inflation needs s >= 1");
        const exp_t n2 = order_ == exact_order
                             ? exact_order
                             : s * (order_ - 1) + 1;
        std::vector<std::uint64_t> c;
        if (!c_.empty()) {
            c.assign(static_cast<std::size_t>(s) * (c_.size() - 1) + 1, 0);
            for (std::size_t i = 0; i < c_.size(); ++i)
                c[static_cast<std::size_t>(s) * i] = c_[i];
        }
        return residue_series(m_, s * val_, std::move(c), n2, tag{});
    }

    residue_series u_image(long p) const
    {
        if (p < 2)
            throw domain_error("residue_series: U(p) needs p >= 2");
        const exp_t v2 = detail::ceil_div(val_, p);
        const exp_t n2 = order_ == exact_order
                             ? exact_order
                             : detail::floor_div(order_ - 1, p) + 1;
        std::vector<std::uint64_t> c;
        if (!c_.empty()) {
            const exp_t hi = val_ + static_cast<exp_t>(c_.size());
            for (exp_t m = v2; p * m < hi; ++m)
                c.push_back(p * m >= val_
                                ? c_[static_cast<std::size_t>(p * m - val_)]
                                : 0);
        }
        return residue_series(m_, v2, std::move(c), n2, tag{});
    }

    friend residue_series operator+(const residue_series& a,
                                    const residue_series& b)
    {
        return combined(a, b, false);
    }
    friend residue_series operator-(const residue_series& a,
                                    const residue_series& b)
    {
        return combined(a, b, true);
    }

    friend residue_series operator*(const residue_series& a,
                                    const residue_series& b)
    {
        require_same(a, b);
        const exp_t order = std::min(sat(a.order_, b.val_),
                                     sat(b.order_, a.val_));
        if (a.c_.empty() || b.c_.empty())
            return zero_to(a.m_, order);
        const exp_t v = a.val_ + b.val_;
        const std::size_t full = a.c_.size() + b.c_.size() - 1;
        std::size_t len = full;
        if (order != exact_order) {
            if (order <= v)
                return zero_to(a.m_, order);
            len = std::min<std::size_t>(full,
                                        static_cast<std::size_t>(order - v));
        }
        std::vector<std::uint64_t> out(len, 0);
        const std::uint64_t m = a.m_;
        for (std::size_t i = 0; i < a.c_.size() && i < len; ++i) {
            if (a.c_[i] == 0)
                continue;
            const std::uint64_t ai = a.c_[i];
            const std::size_t jmax = std::min(b.c_.size(), len - i);
            for (std::size_t j = 0; j < jmax; ++j) {
                if (b.c_[j] == 0)
                    continue;
                out[i + j] = (out[i + j] + ai * b.c_[j]) % m;
            }
        }
        return residue_series(a.m_, v, std::move(out), order, tag{});
    }

    residue_series pow(unsigned long e) const
    {
        residue_series base = *this;
        residue_series acc =
            residue_series(m_, 0, {1 % m_}, exact_order, tag{});
        while (e > 0) {
            if (e & 1UL)
                acc = acc * base;
            e >>= 1UL;
            if (e > 0)
                base = base * base;
        }
        return acc;
    }

    // Exponents in [lo, order) carrying a nonzero residue.
    std::vector<exp_t> nonzero_exponents(exp_t lo) const
    {
        std::vector<exp_t> out;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0 && val_ + static_cast<exp_t>(i) >= lo)
                out.push_back(val_ + static_cast<exp_t>(i));
        return out;
    }

private:
    struct tag {};
    residue_series(std::uint64_t m, exp_t val, std::vector<std::uint64_t> c,
                   exp_t order, tag)
        : m_(m), val_(val), c_(std::move(c)), order_(order)
    {
        normalize();
    }

    static void check_modulus(std::uint64_t m)
    {
        if (m < 2 || m >= (std::uint64_t{1} << 32))
            throw domain_error("residue_series: modulus must lie in "
                               "[2, 2^32)");
    }

    static std::uint64_t mod_of(const mpz_class& z, std::uint64_t m)
    {
        // mpz_fdiv_ui returns the nonnegative residue of |operand| sign-
        // corrected; GMP defines it as the remainder of floor division.
        return mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(m));
    }

    static void require_same(const residue_series& a, const residue_series& b)
    {
        if (a.m_ != b.m_)
            throw domain_error("residue_series: mixed moduli");
    }

    static exp_t sat(exp_t a, exp_t b)
    {
        if (a == exact_order || b == exact_order)
            return exact_order;
        return a + b;
    }

    static residue_series combined(const residue_series& a,
                                   const residue_series& b, bool subtract)
    {
        require_same(a, b);
        const exp_t order = std::min(a.order_, b.order_);
        exp_t lo;
        exp_t hi;
        if (a.c_.empty() && b.c_.empty()) {
            return zero_to(a.m_, order);
        } else if (a.c_.empty()) {
            lo = b.val_;
            hi = b.val_ + static_cast<exp_t>(b.c_.size());
        } else if (b.c_.empty()) {
            lo = a.val_;
            hi = a.val_ + static_cast<exp_t>(a.c_.size());
        } else {
            lo = std::min(a.val_, b.val_);
            hi = std::max(a.val_ + static_cast<exp_t>(a.c_.size()),
                          b.val_ + static_cast<exp_t>(b.c_.size()));
        }
        hi = std::min(hi, order);
        lo = std::min(lo, hi);
        std::vector<std::uint64_t> c(static_cast<std::size_t>(hi - lo), 0);
        const std::uint64_t m = a.m_;
        for (exp_t x = lo; x < hi; ++x) {
            const std::uint64_t av =
                (x >= a.val_ &&
                 static_cast<std::size_t>(x - a.val_) < a.c_.size())
                    ? a.c_[static_cast<std::size_t>(x - a.val_)]
                    : 0;
            const std::uint64_t bv =
                (x >= b.val_ &&
                 static_cast<std::size_t>(x - b.val_) < b.c_.size())
                    ? b.c_[static_cast<std::size_t>(x - b.val_)]
                    : 0;
            c[static_cast<std::size_t>(x - lo)] =
                subtract ? (av + m - bv) % m : (av + bv) % m;
        }
        return residue_series(a.m_, lo, std::move(c), order, tag{});
    }

    void normalize()
    {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
        std::size_t lead = 0;
        while (lead < c_.size() && c_[lead] == 0)
            ++lead;
        if (lead > 0) {
            c_.erase(c_.begin(),
                     c_.begin() + static_cast<std::ptrdiff_t>(lead));
            val_ += static_cast<exp_t>(lead);
        }
        if (c_.empty())
            val_ = order_;
    }

    std::uint64_t m_;
    exp_t val_;
    std::vector<std::uint64_t> c_;
    exp_t order_;
};

} // namespace extremal
