#pragma once

#include <stdexcept>
#include <string>

namespace extremal {

// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// A coefficient (or derived quantity) was requested beyond the window on
// which it is exactly determined.  Requests past the truncation order are
// always a hard error, never a silent zero.
class precision_error : public error {
public:
    explicit precision_error(const std::string& what) : error(what) {}
};

// Series inversion was attempted on a series whose leading coefficient is
// not a unit of the coefficient ring (over Z: not +-1).
class not_invertible_error : public error {
public:
    explicit not_invertible_error(const std::string& what) : error(what) {}
};

// An eta quotient whose global q-prefactor exponent sum(m*e)/24 is not an
// integer; such quotients are outside the supported (integral-exponent)
// fragment.
class eta_product_error : public error {
public:
    explicit eta_product_error(const std::string& what) : error(what) {}
};

// Invalid mathematical inputs: unsupported prime, (p, k) outside the
// congruence table, nonpositive Bessel argument, and similar.
class domain_error : public error {
public:
    explicit domain_error(const std::string& what) : error(what) {}
};

// A certified enumeration (quadratic form lists certified against a class
// number count) exhausted its search bound before reaching the target count.
class enumeration_error : public error {
public:
    explicit enumeration_error(const std::string& what) : error(what) {}
};

// A numerically computed quantity whose true value is a known integer failed
// its integrality gate: the truncated sum landed too far from any integer to
// certify a value.  The caller should raise the truncation index or the
// working precision.
class inconclusive_error : public error {
public:
    explicit inconclusive_error(const std::string& what) : error(what) {}
};

// Internal cross-checks (two independent construction routes for the same
// object) disagreed.  Indicates a bug, not a user error.
class verification_error : public error {
public:
    explicit verification_error(const std::string& what) : error(what) {}
};

} // namespace extremal
