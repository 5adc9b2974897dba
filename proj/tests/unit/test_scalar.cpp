#include <numeric>

#include "helpers.hpp"
#include "qlogic/random.hpp"
#include "qlogic/scalar.hpp"

using namespace qlogic;

namespace {

// Reduced fraction over long long, the oracle for Rational.
struct Fraction {
    long long num;
    long long den;

    Fraction(long long n, long long d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const long long g = std::gcd(n, d);
        num = n / g;
        den = d / g;
    }
    Rational as_rational() const { return Rational::parse(std::to_string(num) + "/" + std::to_string(den)); }
};

Fraction add(Fraction a, Fraction b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
Fraction mul(Fraction a, Fraction b) { return {a.num * b.num, a.den * b.den}; }

}  // namespace

TEST_CASE("rational arithmetic examples") {
    CHECK(Rational::parse("1/2") + Rational::parse("1/3") == Rational::parse("5/6"));
    CHECK(Rational::parse("4/6") == Rational::parse("2/3"));
    CHECK(Rational::parse("-3/4").to_string() == "-3/4");
    CHECK_RAISES(Rational(1) / Rational(0), DivisionByZero);
}

TEST_CASE("rational arithmetic agrees with a reduced-fraction oracle") {
    SplitMix64 rng(11);
    for (int s = 0; s < 500; ++s) {
        const Fraction a(rng.uniform(-50, 50), rng.uniform(1, 40));
        const Fraction b(rng.uniform(-50, 50), rng.uniform(1, 40));
        const Fraction sum = add(a, b);
        const Fraction product = mul(a, b);
        CHECK(a.as_rational() + b.as_rational() == sum.as_rational());
        CHECK(a.as_rational() * b.as_rational() == product.as_rational());
        CHECK((a.as_rational() * b.as_rational()).denominator() == static_cast<long>(product.den));
        if (b.num != 0) CHECK((a.as_rational() / b.as_rational()) * b.as_rational() == a.as_rational());
    }
}

TEST_CASE("gaussian rationals") {
    const GaussianRational one_plus_i(Rational(1), Rational(1));
    CHECK(one_plus_i * one_plus_i.conj() == GaussianRational(Rational(2), Rational(0)));
    const Scalar z = Scalar::parse("2+3i");
    CHECK(z.conj() == Scalar::parse("2-3i"));
    CHECK(one_plus_i.norm() == Rational(2));

    SplitMix64 rng(5);
    const FieldTag qi = FieldTag::gaussian();
    for (int s = 0; s < 100; ++s) {
        const Scalar a = random_scalar(rng, qi);
        const Scalar b = random_scalar(rng, qi);
        CHECK(a.conj().conj() == a);
        CHECK((a * b).conj() == a.conj() * b.conj());
        if (!b.is_zero()) CHECK((a / b) * b == a);
        // (x+yi)(u+vi) = (xu - yv) + (xv + yu)i
        const auto& ga = *a.as_gaussian();
        const auto& gb = *b.as_gaussian();
        const GaussianRational expected(ga.re() * gb.re() - ga.im() * gb.im(), ga.re() * gb.im() + ga.im() * gb.re());
        CHECK(*(a * b).as_gaussian() == expected);
    }
}

TEST_CASE("prime fields") {
    const FieldTag f7 = FieldTag::prime(7);
    CHECK(Scalar::from_int(f7, 3) * Scalar::from_int(f7, 5) == Scalar::one(f7));
    CHECK(Scalar::from_int(f7, 5).conj() == Scalar::from_int(f7, 5));
    CHECK(Scalar::from_int(f7, -1) == Scalar::from_int(f7, 6));
    CHECK_RAISES(FieldTag::prime(4), InvalidArgument);
    CHECK_RAISES(FieldTag::prime(101), InvalidArgument);

    // Inverses against exhaustive search.
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 97u}) {
        const FieldTag f = FieldTag::prime(p);
        for (std::uint32_t a = 1; a < p; ++a) {
            std::uint32_t found = 0;
            for (std::uint32_t b = 1; b < p; ++b)
                if (a * b % p == 1) found = b;
            CHECK(Scalar::from_int(f, a).inverse() == Scalar::from_int(f, found));
        }
    }
    CHECK_RAISES(Scalar::zero(f7).inverse(), DivisionByZero);
}

TEST_CASE("mixing fields is rejected") {
    CHECK_RAISES(Scalar::one(FieldTag::prime(3)) + Scalar::one(FieldTag::prime(5)), FieldMismatch);
    CHECK_RAISES(Scalar::one(FieldTag::rationals()) * Scalar::one(FieldTag::gaussian()), FieldMismatch);
}

TEST_CASE("textual syntax round-trips") {
    SplitMix64 rng(3);
    for (FieldTag f : {FieldTag::rationals(), FieldTag::gaussian(), FieldTag::prime(13)}) {
        CHECK(FieldTag::parse(f.to_string()) == f);
        for (int s = 0; s < 50; ++s) {
            Scalar x = random_scalar(rng, f);
            if (!f.is_finite()) x = x / Scalar::from_int(f, rng.uniform(1, 9));
            CHECK(Scalar::parse(x.to_string(), f) == x);
        }
    }
    CHECK_RAISES(Scalar::parse("1/"), ParseError);
}
