#pragma once

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "corona/rational.hpp"

namespace corona {

// Element of Q(sqrt2, sqrt3): a + b*sqrt2 + c*sqrt3 + d*sqrt6.
// Closed under +,-,*,/; this field contains every vertex coordinate of a
// unit-edge tiling by regular 3-, 4-, 6-, 8- or 12-gons (all angles are
// multiples of 15 degrees, and cos15 = (sqrt6+sqrt2)/4).
struct QuarticScalar {
    Rational a, b, c, d;

    QuarticScalar() = default;
    QuarticScalar(Rational ra) : a(std::move(ra)) {}
    QuarticScalar(long n) : a(n) {}
    QuarticScalar(Rational ra, Rational rb, Rational rc, Rational rd)
        : a(std::move(ra)), b(std::move(rb)), c(std::move(rc)), d(std::move(rd)) {}

    static QuarticScalar sqrt2() { return {Rational(0), Rational(1), Rational(0), Rational(0)}; }
    static QuarticScalar sqrt3() { return {Rational(0), Rational(0), Rational(1), Rational(0)}; }
    static QuarticScalar sqrt6() { return {Rational(0), Rational(0), Rational(0), Rational(1)}; }

    // zero iff all coefficients vanish: {1, sqrt2, sqrt3, sqrt6} is a Q-basis
    bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }
    bool is_rational() const { return b.is_zero() && c.is_zero() && d.is_zero(); }

    QuarticScalar operator-() const { return {-a, -b, -c, -d}; }

    friend QuarticScalar operator+(const QuarticScalar& p, const QuarticScalar& q) {
        return {p.a + q.a, p.b + q.b, p.c + q.c, p.d + q.d};
    }
    friend QuarticScalar operator-(const QuarticScalar& p, const QuarticScalar& q) {
        return {p.a - q.a, p.b - q.b, p.c - q.c, p.d - q.d};
    }
    // basis products: r2*r3 = r6, r2*r6 = 2*r3, r3*r6 = 3*r2
    friend QuarticScalar operator*(const QuarticScalar& p, const QuarticScalar& q) {
        return {p.a * q.a + Rational(2) * p.b * q.b + Rational(3) * p.c * q.c + Rational(6) * p.d * q.d,
                p.a * q.b + p.b * q.a + Rational(3) * (p.c * q.d + p.d * q.c),
                p.a * q.c + p.c * q.a + Rational(2) * (p.b * q.d + p.d * q.b),
                p.a * q.d + p.d * q.a + p.b * q.c + p.c * q.b};
    }
    QuarticScalar& operator+=(const QuarticScalar& q) { return *this = *this + q; }
    QuarticScalar& operator-=(const QuarticScalar& q) { return *this = *this - q; }
    QuarticScalar& operator*=(const QuarticScalar& q) { return *this = *this * q; }

    friend bool operator==(const QuarticScalar& p, const QuarticScalar& q) {
        return p.a == q.a && p.b == q.b && p.c == q.c && p.d == q.d;
    }
    friend bool operator!=(const QuarticScalar& p, const QuarticScalar& q) { return !(p == q); }
};

// Multiplicative inverse via the Galois conjugates over {sqrt2 -> +-sqrt2,
// sqrt3 -> +-sqrt3}: p * s1(p) * s2(p) * s3(p) is rational.
inline QuarticScalar inverse(const QuarticScalar& p) {
    if (p.is_zero()) throw std::domain_error("QuarticScalar: inverse of zero");
    QuarticScalar s1{p.a, -p.b, p.c, -p.d};
    QuarticScalar s2{p.a, p.b, -p.c, -p.d};
    QuarticScalar s3{p.a, -p.b, -p.c, p.d};
    QuarticScalar num = s1 * s2 * s3;
    QuarticScalar norm = p * num;
    assert(norm.is_rational() && !norm.a.is_zero());
    Rational inv_n = Rational(1) / norm.a;
    return {num.a * inv_n, num.b * inv_n, num.c * inv_n, num.d * inv_n};
}

inline QuarticScalar operator/(const QuarticScalar& p, const QuarticScalar& q) {
    return p * inverse(q);
}

namespace detail {

// [lo, hi] enclosing sqrt(n) with hi - lo = 2^-bits
inline std::pair<Rational, Rational> sqrt_enclosure(unsigned n, unsigned bits) {
    mpz_class scale = mpz_class(1) << bits;
    mpz_class lo;
    mpz_sqrt(lo.get_mpz_t(), mpz_class(n * scale * scale).get_mpz_t());
    return {Rational(lo, scale), Rational(lo + 1, scale)};
}

inline std::pair<Rational, Rational> enclose(const QuarticScalar& p, unsigned bits) {
    Rational lo = p.a, hi = p.a;
    const unsigned radicands[3] = {2, 3, 6};
    const Rational* coefs[3] = {&p.b, &p.c, &p.d};
    for (int i = 0; i < 3; ++i) {
        const Rational& k = *coefs[i];
        if (k.is_zero()) continue;
        auto [l, h] = sqrt_enclosure(radicands[i], bits);
        if (k.sign() >= 0) {
            lo += k * l;
            hi += k * h;
        } else {
            lo += k * h;
            hi += k * l;
        }
    }
    return {lo, hi};
}

}  // namespace detail

// Exact sign. Zero is a coefficient test; otherwise rational interval
// enclosures of the radicals are refined (64 bits, doubling) until the
// enclosure excludes zero. Terminates for every nonzero element.
inline int sign(const QuarticScalar& p) {
    if (p.is_zero()) return 0;
    if (p.is_rational()) return p.a.sign();
    for (unsigned bits = 64;; bits *= 2) {
        auto [lo, hi] = detail::enclose(p, bits);
        if (lo.sign() > 0) return 1;
        if (hi.sign() < 0) return -1;
        if (bits > (1u << 20))
            throw std::logic_error("QuarticScalar: sign refinement did not converge");
    }
}

inline bool numeric_less(const QuarticScalar& p, const QuarticScalar& q) {
    return sign(p - q) < 0;
}

// Rational r with |r - p| <= eps.
inline Rational approximate(const QuarticScalar& p, const Rational& eps) {
    if (eps.sign() <= 0) throw std::domain_error("approximate: eps must be positive");
    if (p.is_rational()) return p.a;
    for (unsigned bits = 64;; bits *= 2) {
        auto [lo, hi] = detail::enclose(p, bits);
        if (hi - lo <= eps + eps) return (lo + hi) * Rational(1, 2);
        if (bits > (1u << 20))
            throw std::logic_error("QuarticScalar: approximation did not converge");
    }
}

inline double to_double(const QuarticScalar& p) {
    return approximate(p, Rational(1, 1L << 60)).to_double();
}

namespace detail {

// mantissa (sig digits) and exponent of a positive rational, half-even ties
inline std::pair<mpz_class, long> round_digits(const Rational& x, int sig) {
    assert(x.sign() > 0);
    // e = floor(log10 x), found exactly from a double seed
    long e = static_cast<long>(std::floor(std::log10(x.to_double() > 0 ? x.to_double() : 1e-300)));
    auto pow10 = [](long k) {
        mpz_class r;
        mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(k >= 0 ? k : -k));
        return r;
    };
    auto cmp_pow10 = [&](long k) {  // sign of x - 10^k
        Rational p = k >= 0 ? Rational(pow10(k), mpz_class(1)) : Rational(mpz_class(1), pow10(k));
        return (x - p).sign();
    };
    while (cmp_pow10(e) < 0) --e;
    while (cmp_pow10(e + 1) >= 0) ++e;
    // m = x * 10^(sig-1-e), rounded half-even
    long shift = sig - 1 - e;
    Rational m = shift >= 0 ? x * Rational(pow10(shift), mpz_class(1))
                            : x * Rational(mpz_class(1), pow10(shift));
    mpz_class fl = m.num() / m.den();  // floor (positive values)
    Rational frac = m - Rational(fl, mpz_class(1));
    int half = (frac - Rational(1, 2)).sign();
    mpz_class mant = fl;
    if (half > 0 || (half == 0 && mpz_odd_p(fl.get_mpz_t())))
        mant = fl + 1;
    mpz_class limit = pow10(sig);
    if (mant == limit) {
        mant /= 10;
        ++e;
    }
    return {mant, e};
}

inline std::string format_digits(bool negative, const std::string& digits, long e) {
    std::string out = negative ? "-" : "";
    long sig = static_cast<long>(digits.size());
    if (e >= 0 && e < 16) {
        if (e + 1 >= sig) {
            out += digits + std::string(e + 1 - sig, '0');
        } else {
            out += digits.substr(0, e + 1) + "." + digits.substr(e + 1);
        }
    } else if (e < 0 && e >= -6) {
        out += "0." + std::string(-e - 1, '0') + digits;
    } else {
        out += digits.substr(0, 1) + "." + digits.substr(1) + "e" + std::to_string(e);
    }
    return out;
}

}  // namespace detail

// Correctly rounded decimal with `sig` significant digits. The rounding is
// driven by interval refinement, so the printed digits are those of the exact
// value (ties occur only for rational inputs and round half-even).
inline std::string render_decimal(const QuarticScalar& p, int sig = 12) {
    int s = sign(p);
    if (s == 0) return "0";
    QuarticScalar abs = s < 0 ? -p : p;
    if (abs.is_rational()) {
        auto [mant, e] = detail::round_digits(abs.a, sig);
        return detail::format_digits(s < 0, mant.get_str(), e);
    }
    for (unsigned bits = 64;; bits *= 2) {
        if (bits > (1u << 20))
            throw std::logic_error("render_decimal: did not converge");
        auto [lo, hi] = detail::enclose(abs, bits);
        if (lo.sign() <= 0) continue;
        auto rl = detail::round_digits(lo, sig);
        auto rh = detail::round_digits(hi, sig);
        if (rl == rh) return detail::format_digits(s < 0, rl.first.get_str(), rl.second);
    }
}

}  // namespace corona
