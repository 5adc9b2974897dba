#pragma once

// Exact field elements with an involution: rationals, Gaussian rationals
// Q(i) and prime fields GF(p), p <= 97.

#include <cstdint>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "qlogic/error.hpp"

namespace qlogic {

class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(mpq_class value);

    /// Accepts "7", "-3/4"; whitespace around the tokens is ignored.
    static Rational parse(std::string_view text);

    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::string to_string() const;

private:
    mpq_class value_;
};

/// a + bi with a, b rational. The involution is complex conjugation.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re, Rational im = Rational()) : re_(std::move(re)), im_(std::move(im)) {}  // NOLINT

    /// Accepts "3/4", "1/2i", "3/4+1/2i", "3/4-i", "i", "-i".
    static GaussianRational parse(std::string_view text);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }
    /// |z|^2 = re^2 + im^2
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
    friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
        if (auto c = a.re_ <=> b.re_; c != 0) return c;
        return a.im_ <=> b.im_;
    }

    std::string to_string() const;

private:
    Rational re_;
    Rational im_;
};

/// Residue modulo a prime p <= 97. The involution is the identity.
class PrimeFieldElement {
public:
    static constexpr std::uint32_t kMaxModulus = 97;

    PrimeFieldElement(long value, std::uint32_t modulus);

    std::uint32_t residue() const { return residue_; }
    std::uint32_t modulus() const { return modulus_; }
    bool is_zero() const { return residue_ == 0; }

    PrimeFieldElement inverse() const;

    PrimeFieldElement operator-() const;
    PrimeFieldElement& operator+=(const PrimeFieldElement& o);
    PrimeFieldElement& operator-=(const PrimeFieldElement& o);
    PrimeFieldElement& operator*=(const PrimeFieldElement& o);
    PrimeFieldElement& operator/=(const PrimeFieldElement& o);

    friend PrimeFieldElement operator+(PrimeFieldElement a, const PrimeFieldElement& b) { return a += b; }
    friend PrimeFieldElement operator-(PrimeFieldElement a, const PrimeFieldElement& b) { return a -= b; }
    friend PrimeFieldElement operator*(PrimeFieldElement a, const PrimeFieldElement& b) { return a *= b; }
    friend PrimeFieldElement operator/(PrimeFieldElement a, const PrimeFieldElement& b) { return a /= b; }

    friend bool operator==(const PrimeFieldElement&, const PrimeFieldElement&) = default;
    friend auto operator<=>(const PrimeFieldElement&, const PrimeFieldElement&) = default;

    /// "5 mod 7"
    std::string to_string() const;

private:
    void check_same(const PrimeFieldElement& o) const;

    std::uint32_t modulus_;
    std::uint32_t residue_;
};

bool is_prime(std::uint32_t p);

enum class FieldKind : std::uint8_t { Rational, Gaussian, Prime };

struct FieldTag {
    FieldKind kind = FieldKind::Rational;
    std::uint32_t modulus = 0;  // only meaningful for Prime

    static FieldTag rationals() { return {FieldKind::Rational, 0}; }
    static FieldTag gaussian() { return {FieldKind::Gaussian, 0}; }
    static FieldTag prime(std::uint32_t p);

    bool has_conjugation() const { return kind == FieldKind::Gaussian; }
    bool is_finite() const { return kind == FieldKind::Prime; }

    /// "Q", "Q(i)" or "GF(p)"
    std::string to_string() const;
    /// Inverse of to_string; also accepts "QI", "gaussian" and "GF7".
    static FieldTag parse(std::string_view text);

    friend bool operator==(const FieldTag&, const FieldTag&) = default;
};

/// An element of one of the three backends. Arithmetic between different
/// backends (or different primes) raises FieldMismatch.
class Scalar {
public:
    using Storage = std::variant<Rational, GaussianRational, PrimeFieldElement>;

    Scalar() : value_(Rational()) {}
    Scalar(Rational v) : value_(std::move(v)) {}                   // NOLINT
    Scalar(GaussianRational v) : value_(std::move(v)) {}           // NOLINT
    Scalar(PrimeFieldElement v) : value_(v) {}                     // NOLINT

    static Scalar from_int(FieldTag field, long value);
    static Scalar zero(FieldTag field) { return from_int(field, 0); }
    static Scalar one(FieldTag field) { return from_int(field, 1); }
    /// Embeds a rational into `field`. Prime fields need an invertible denominator.
    static Scalar from_rational(FieldTag field, const Rational& value);

    /// Parses the textual syntax "3/4", "3/4+1/2i", "5 mod 7". With a field
    /// given, plain integers/rationals are embedded into it.
    static Scalar parse(std::string_view text);
    static Scalar parse(std::string_view text, FieldTag field);

    FieldTag field() const;
    bool is_zero() const;
    bool is_one() const { return *this == one(field()); }

    const Storage& storage() const { return value_; }
    const Rational* as_rational() const { return std::get_if<Rational>(&value_); }
    const GaussianRational* as_gaussian() const { return std::get_if<GaussianRational>(&value_); }
    const PrimeFieldElement* as_prime() const { return std::get_if<PrimeFieldElement>(&value_); }

    /// The real rational value when the scalar has zero imaginary part.
    std::optional<Rational> real_value() const;

    /// Field involution: complex conjugation on Q(i), identity elsewhere.
    Scalar conj() const;
    Scalar inverse() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    /// Scalars from different fields compare unequal.
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
    /// Total order (by field, then value); used for canonical containers only.
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

    std::string to_string() const;

private:
    Storage value_;
};

}  // namespace qlogic
