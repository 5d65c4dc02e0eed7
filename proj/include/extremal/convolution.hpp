#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <vector>

#include <gmpxx.h>

// Dense integer convolution — the inner loop of all q-series multiplication.
//
// Two strategies are provided behind one dispatch point:
//
//   * schoolbook: the quadratic double loop, using mpz_addmul so no
//     temporaries are allocated.  Best for short operands.
//
//   * Kronecker substitution: pack each operand into a single huge integer
//     (one fixed-width bit slot per coefficient), perform ONE big GMP
//     multiplication (which uses FFT at this size), and slice the product
//     back into slots.  Signed inputs are handled by splitting into
//     positive/negative parts: with P1 = a+*b+, P2 = a-*b-, and
//     P3 = (a+ + a-)(b+ + b-), the signed product is 2(P1+P2) - P3
//     slot-by-slot, so at most three nonnegative multiplications suffice
//     (one when both inputs are nonnegative, the common case here).
//
// Both paths produce bit-identical results; this is property-tested.

namespace extremal::detail {

static_assert(GMP_NAIL_BITS == 0, "nail-free GMP limbs required");

// Truncated schoolbook convolution: out[k] = sum_{i+j=k} a[i]*b[j] for
// k < out_len.
inline void convolve_schoolbook(const std::vector<mpz_class>& a,
                                const std::vector<mpz_class>& b,
                                std::vector<mpz_class>& out,
                                std::size_t out_len)
{
    out.assign(out_len, mpz_class(0));
    const std::size_t la = a.size(), lb = b.size();
    for (std::size_t i = 0; i < la && i < out_len; ++i) {
        if (sgn(a[i]) == 0)
            continue;
        const std::size_t jmax = std::min(lb, out_len - i);
        for (std::size_t j = 0; j < jmax; ++j) {
            // gmpxx lowers this onto mpz_addmul: no temporary is created.
            out[i + j] += a[i] * b[j];
        }
    }
}

inline std::size_t max_coeff_bits(const std::vector<mpz_class>& v)
{
    std::size_t best = 0;
    for (const auto& x : v)
        if (sgn(x) != 0)
            best = std::max(best, mpz_sizeinbase(x.get_mpz_t(), 2));
    return best;
}

inline bool all_nonnegative(const std::vector<mpz_class>& v)
{
    for (const auto& x : v)
        if (sgn(x) < 0)
            return false;
    return true;
}

// Pack nonnegative coefficients into one big integer:
//   out = sum_i v[i] * 2^(i*slot_bits),   requires 0 <= v[i] < 2^slot_bits.
// Slots are disjoint bit ranges, so OR-accumulation into a limb buffer is
// exact; the buffer is then imported in one call.
inline void pack_slots(mpz_class& out, const std::vector<mpz_class>& v,
                       std::size_t slot_bits)
{
    constexpr std::size_t LB = GMP_NUMB_BITS;
    const std::size_t total_bits = v.size() * slot_bits + LB;
    std::vector<mp_limb_t> buf(total_bits / LB + 2, 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        mpz_srcptr z = v[i].get_mpz_t();
        const std::size_t zn = mpz_size(z);
        if (zn == 0)
            continue;
        const mp_limb_t* zl = mpz_limbs_read(z);
        const std::size_t bit0 = i * slot_bits;
        const std::size_t w = bit0 / LB;
        const unsigned r = static_cast<unsigned>(bit0 % LB);
        if (r == 0) {
            for (std::size_t t = 0; t < zn; ++t)
                buf[w + t] |= zl[t];
        } else {
            for (std::size_t t = 0; t < zn; ++t) {
                buf[w + t] |= zl[t] << r;
                buf[w + t + 1] |= zl[t] >> (LB - r);
            }
        }
    }
    mpz_import(out.get_mpz_t(), buf.size(), -1, sizeof(mp_limb_t), 0, 0,
               buf.data());
}

// Slice slot i (slot_bits wide) out of z for i < nslots.  Each extraction
// imports only the limbs covering the slot, so the total cost is linear in
// the size of z.
inline void unpack_slots(const mpz_class& z, std::size_t nslots,
                         std::size_t slot_bits, std::vector<mpz_class>& out)
{
    constexpr std::size_t LB = GMP_NUMB_BITS;
    mpz_srcptr zp = z.get_mpz_t();
    const std::size_t zn = mpz_size(zp);
    const mp_limb_t* zl = mpz_limbs_read(zp);
    out.assign(nslots, mpz_class(0));
    mpz_class tmp;
    for (std::size_t i = 0; i < nslots; ++i) {
        const std::size_t bit0 = i * slot_bits;
        const std::size_t w0 = bit0 / LB;
        if (w0 >= zn)
            break;
        const unsigned r = static_cast<unsigned>(bit0 % LB);
        const std::size_t wend = std::min(zn, (bit0 + slot_bits) / LB + 1);
        mpz_import(tmp.get_mpz_t(), wend - w0, -1, sizeof(mp_limb_t), 0, 0,
                   zl + w0);
        mpz_tdiv_q_2exp(tmp.get_mpz_t(), tmp.get_mpz_t(), r);
        mpz_fdiv_r_2exp(tmp.get_mpz_t(), tmp.get_mpz_t(), slot_bits);
        out[i] = tmp;
    }
}

inline void convolve_kronecker(const std::vector<mpz_class>& a,
                               const std::vector<mpz_class>& b,
                               std::vector<mpz_class>& out,
                               std::size_t out_len)
{
    const std::size_t la = a.size(), lb = b.size();
    const std::size_t bits_a = max_coeff_bits(a);
    const std::size_t bits_b = max_coeff_bits(b);
    if (bits_a == 0 || bits_b == 0) {
        out.assign(out_len, mpz_class(0));
        return;
    }
    // Any product slot is a sum of at most min(la, lb) terms, each below
    // 2^(bits_a + bits_b); pad a little for safety.
    const std::size_t slot =
        bits_a + bits_b + std::bit_width(std::min(la, lb)) + 4;
    const std::size_t nwanted = std::min(out_len, la + lb - 1);

    if (all_nonnegative(a) && all_nonnegative(b)) {
        mpz_class pa, pb;
        pack_slots(pa, a, slot);
        pack_slots(pb, b, slot);
        pa *= pb;
        unpack_slots(pa, nwanted, slot, out);
    } else {
        std::vector<mpz_class> ap(la), an(la), bp(lb), bn(lb);
        for (std::size_t i = 0; i < la; ++i)
            (sgn(a[i]) >= 0 ? ap[i] : an[i]) = abs(a[i]);
        for (std::size_t j = 0; j < lb; ++j)
            (sgn(b[j]) >= 0 ? bp[j] : bn[j]) = abs(b[j]);
        mpz_class zap, zan, zbp, zbn;
        pack_slots(zap, ap, slot);
        pack_slots(zan, an, slot);
        pack_slots(zbp, bp, slot);
        pack_slots(zbn, bn, slot);
        const mpz_class p1 = zap * zbp;
        const mpz_class p2 = zan * zbn;
        const mpz_class p3 = (zap + zan) * (zbp + zbn);
        std::vector<mpz_class> u1, u2, u3;
        unpack_slots(p1, nwanted, slot, u1);
        unpack_slots(p2, nwanted, slot, u2);
        unpack_slots(p3, nwanted, slot, u3);
        out.assign(nwanted, mpz_class(0));
        for (std::size_t k = 0; k < nwanted; ++k) {
            out[k] = u1[k] + u2[k];
            out[k] <<= 1;
            out[k] -= u3[k];
        }
    }
    out.resize(out_len); // zero-fill any tail past the full product length
}

// Dispatcher.  The crossover favours Kronecker early: already at a few
// hundred multi-word coefficients the single big multiplication wins.
inline void convolve_into(const std::vector<mpz_class>& a,
                          const std::vector<mpz_class>& b,
                          std::vector<mpz_class>& out, std::size_t out_len)
{
    if (out_len == 0 || a.empty() || b.empty()) {
        out.assign(out_len, mpz_class(0));
        return;
    }
    const std::size_t small = std::min(a.size(), b.size());
    if (small >= 16 && a.size() * b.size() >= 16384)
        convolve_kronecker(a, b, out, out_len);
    else
        convolve_schoolbook(a, b, out, out_len);
}

// Generic schoolbook convolution for any coefficient ring providing
// default construction (= zero), += and *.
template <class R>
inline void convolve_generic(const std::vector<R>& a, const std::vector<R>& b,
                             std::vector<R>& out, std::size_t out_len)
{
    out.assign(out_len, R());
    const std::size_t la = a.size(), lb = b.size();
    for (std::size_t i = 0; i < la && i < out_len; ++i) {
        const std::size_t jmax = std::min(lb, out_len - i);
        for (std::size_t j = 0; j < jmax; ++j)
            out[i + j] += a[i] * b[j];
    }
}

} // namespace extremal::detail
