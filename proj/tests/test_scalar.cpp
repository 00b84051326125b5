#include <catch_amalgamated.hpp>

#include "corona/scalar.hpp"

using namespace corona;

namespace {

QuarticScalar qs(long a, long b = 0, long c = 0, long d = 0) {
    return {Rational(a), Rational(b), Rational(c), Rational(d)};
}

QuarticScalar qr(long an, long ad, long bn = 0, long bd = 1, long cn = 0, long cd = 1,
                 long dn = 0, long dd = 1) {
    return {Rational(an, ad), Rational(bn, bd), Rational(cn, cd), Rational(dn, dd)};
}

// independent sign oracle: one-shot 256-bit integer enclosure, no refinement
int oracle_sign(const QuarticScalar& p) {
    const unsigned bits = 256;
    mpz_class scale = mpz_class(1) << bits;
    auto root = [&](unsigned long n) {
        mpz_class r;
        mpz_class t = n * scale * scale;
        mpz_sqrt(r.get_mpz_t(), t.get_mpz_t());
        return r;
    };
    mpq_class lo = p.a.raw(), hi = p.a.raw();
    unsigned long rads[3] = {2, 3, 6};
    const Rational* cs[3] = {&p.b, &p.c, &p.d};
    for (int i = 0; i < 3; ++i) {
        mpz_class rt = root(rads[i]);
        mpq_class l(rt, scale), h(rt + 1, scale);
        l.canonicalize();
        h.canonicalize();
        if (cs[i]->sign() >= 0) {
            lo += cs[i]->raw() * l;
            hi += cs[i]->raw() * h;
        } else {
            lo += cs[i]->raw() * h;
            hi += cs[i]->raw() * l;
        }
    }
    if (sgn(lo) > 0) return 1;
    if (sgn(hi) < 0) return -1;
    return 0;
}

// small deterministic generator for property checks
std::vector<QuarticScalar> sample_values() {
    std::vector<QuarticScalar> out;
    uint64_t state = 12345;
    auto next = [&]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<long>((state >> 33) % 19) - 9;
    };
    for (int i = 0; i < 40; ++i) {
        long den = std::abs(next()) % 6 + 1;
        out.push_back(qr(next(), den, next(), den, next(), den, next(), den));
    }
    return out;
}

}  // namespace

TEST_CASE("quartic addition") {
    CHECK(qs(1, 0, 1) + qs(2, 0, -1) == qs(3));          // (1+r3) + (2-r3) = 3
    CHECK(qs(0) + QuarticScalar::sqrt6() == qs(0, 0, 0, 1));
    CHECK(qr(0, 1, 1, 2) + qr(0, 1, 1, 2) == QuarticScalar::sqrt2());
}

TEST_CASE("quartic multiplication") {
    CHECK(qs(1, 1) * qs(1, -1) == qs(-1));               // (1+r2)(1-r2) = -1
    CHECK(QuarticScalar::sqrt2() * QuarticScalar::sqrt3() == QuarticScalar::sqrt6());
    CHECK(qs(1, 0, 1) * qs(1, 0, 1) == qs(4, 0, 2));     // (1+r3)^2 = 4+2r3
}

TEST_CASE("quartic inverse") {
    CHECK(inverse(QuarticScalar::sqrt2()) == qr(0, 1, 1, 2));
    CHECK(inverse(qs(2)) == qr(1, 2));
    CHECK(inverse(qs(1, 1)) == qs(-1, 1));               // 1/(1+r2) = -1+r2
    CHECK_THROWS_AS(inverse(qs(0)), std::domain_error);
}

TEST_CASE("sign determination") {
    CHECK(sign(qs(0)) == 0);
    QuarticScalar p = QuarticScalar::sqrt2() + QuarticScalar::sqrt3() - QuarticScalar::sqrt6();
    CHECK(sign(p) == 1);
    CHECK(oracle_sign(p) == 1);
    QuarticScalar p2 = qs(3, -2);                        // 3 - 2*sqrt2
    CHECK(sign(p2) == 1);
    CHECK(oracle_sign(p2) == 1);
    // near-cancellation: 9 - 4*sqrt6 * ... pick something tiny but nonzero
    QuarticScalar tiny = qs(5, 0, 0, -2) - qr(1, 100000);  // 5 - 2*sqrt6 ~ 0.10102 - 1e-5
    CHECK(sign(tiny) == oracle_sign(tiny));
}

TEST_CASE("approximate") {
    // sqrt(3) = 1.732050807568877293527446... (frozen reference digits)
    Rational ref(mpz_class("1732050807568877293527446"), mpz_class("1000000000000000000000000"));
    Rational eps(1, mpz_class("1000000000000"));
    Rational got = approximate(QuarticScalar::sqrt3(), eps);
    CHECK((got - ref).abs() <= eps + Rational(1, mpz_class("1000000000000000000000")));

    CHECK(approximate(qs(5), Rational(1, 7)) == Rational(5));

    QuarticScalar v = qr(3, 4, 0, 1, 1, 4);  // (3+sqrt3)/4 = 1.18301270189...
    Rational ref2(mpz_class("1183012701892219"), mpz_class("1000000000000000"));
    Rational eps2(1, 1000000);
    CHECK((approximate(v, eps2) - ref2).abs() <= eps2 + eps2);
}

TEST_CASE("field axioms on sampled values") {
    auto vals = sample_values();
    for (size_t i = 0; i + 2 < vals.size(); i += 3) {
        const auto &p = vals[i], &q = vals[i + 1], &r = vals[i + 2];
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        if (!p.is_zero()) CHECK(p * inverse(p) == qs(1));
        CHECK(sign(p * q) == sign(p) * sign(q));
    }
}

TEST_CASE("approximate lands inside the refinement interval") {
    auto vals = sample_values();
    Rational eps(1, 1 << 20);
    for (const auto& p : vals) {
        Rational r = approximate(p, eps);
        // |r - p| <= eps, verified through the sign of p - r against +-eps
        QuarticScalar diff = p - QuarticScalar(r);
        CHECK(sign(diff - QuarticScalar(eps)) <= 0);
        CHECK(sign(diff + QuarticScalar(eps)) >= 0);
    }
}

TEST_CASE("decimal rendering") {
    CHECK(render_decimal(QuarticScalar::sqrt3()) == "1.73205080757");
    CHECK(render_decimal(qs(5)) == "5.00000000000");
    CHECK(render_decimal(qs(0)) == "0");
    CHECK(render_decimal(qs(-1) * QuarticScalar::sqrt2()) == "-1.41421356237");
    CHECK(render_decimal(qr(1, 3)) == "0.333333333333");
    CHECK(render_decimal(qr(3, 4, 0, 1, 1, 4)) == "1.18301270189");
}
