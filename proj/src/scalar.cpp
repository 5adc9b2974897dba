#include "qlogic/scalar.hpp"

#include <algorithm>
#include <cctype>

namespace qlogic {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::NotInvertible: return "NotInvertible";
        case ErrorKind::NotCompatible: return "NotCompatible";
        case ErrorKind::NotCompatibleSet: return "NotCompatibleSet";
        case ErrorKind::DegeneratePair: return "DegeneratePair";
        case ErrorKind::CriterionDisagreement: return "CriterionDisagreement";
        case ErrorKind::UnclassifiableClique: return "UnclassifiableClique";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::NotMembers: return "NotMembers";
        case ErrorKind::NotOrthoApartment: return "NotOrthoApartment";
        case ErrorKind::AssumptionViolated: return "AssumptionViolated";
        case ErrorKind::NotComplementClosed: return "NotComplementClosed";
    }
    return "Unknown";
}

namespace {

std::string strip(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

bool is_integer_token(std::string_view s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

bool is_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c)) != 0;
    });
}

}  // namespace

// ---------------------------------------------------------------- Rational

Rational::Rational(long num, long den) {
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    const std::string s = strip(text);
    const auto slash = s.find('/');
    const std::string num = s.substr(0, slash);
    if (!is_integer_token(num)) throw Error(ErrorKind::ParseError, "bad rational '" + std::string(text) + "'");
    mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
    mpz_class d = 1;
    if (slash != std::string::npos) {
        const std::string den = s.substr(slash + 1);
        if (!is_digits(den)) throw Error(ErrorKind::ParseError, "bad rational '" + std::string(text) + "'");
        d = mpz_class(den, 10);
        if (d == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
    }
    mpq_class q(n, d);
    return Rational(q);
}

Rational& Rational::operator+=(const Rational& o) { value_ += o.value_; return *this; }
Rational& Rational::operator-=(const Rational& o) { value_ -= o.value_; return *this; }
Rational& Rational::operator*=(const Rational& o) { value_ *= o.value_; return *this; }
Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational division by zero");
    value_ /= o.value_;
    return *this;
}

std::string Rational::to_string() const { return value_.get_str(10); }

// -------------------------------------------------------- GaussianRational

GaussianRational GaussianRational::parse(std::string_view text) {
    const std::string s = strip(text);
    if (s.empty()) throw Error(ErrorKind::ParseError, "empty scalar");
    if (s.back() != 'i') return {Rational::parse(s), Rational()};

    const std::string body = s.substr(0, s.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t pos = body.size(); pos-- > 1;) {
        if (body[pos] == '+' || body[pos] == '-') {
            split = pos;
            break;
        }
    }
    std::string re_text = split == std::string::npos ? "0" : body.substr(0, split);
    std::string im_text = split == std::string::npos ? body : body.substr(split);
    if (im_text.empty() || im_text == "+") im_text = "1";
    if (im_text == "-") im_text = "-1";
    return {Rational::parse(re_text), Rational::parse(im_text)};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "Gaussian division by zero");
    const Rational n = o.norm();
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

std::string GaussianRational::to_string() const {
    if (im_.is_zero()) return re_.to_string();
    if (re_.is_zero()) return im_.to_string() + "i";
    std::string out = re_.to_string();
    if (im_.sign() > 0) out += "+";
    out += im_.to_string();
    out += "i";
    return out;
}

// -------------------------------------------------------- PrimeFieldElement

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

PrimeFieldElement::PrimeFieldElement(long value, std::uint32_t modulus) : modulus_(modulus) {
    if (modulus > kMaxModulus || !is_prime(modulus))
        throw Error(ErrorKind::InvalidArgument, "modulus must be a prime <= 97, got " + std::to_string(modulus));
    long r = value % static_cast<long>(modulus);
    if (r < 0) r += modulus;
    residue_ = static_cast<std::uint32_t>(r);
}

void PrimeFieldElement::check_same(const PrimeFieldElement& o) const {
    if (modulus_ != o.modulus_)
        throw Error(ErrorKind::FieldMismatch,
                    "GF(" + std::to_string(modulus_) + ") vs GF(" + std::to_string(o.modulus_) + ")");
}

PrimeFieldElement PrimeFieldElement::inverse() const {
    if (residue_ == 0) throw Error(ErrorKind::DivisionByZero, "inverse of 0 mod " + std::to_string(modulus_));
    // Fermat: a^(p-2)
    std::uint32_t result = 1;
    std::uint32_t base = residue_;
    std::uint32_t e = modulus_ - 2;
    while (e > 0) {
        if (e & 1U) result = result * base % modulus_;
        base = base * base % modulus_;
        e >>= 1U;
    }
    return {static_cast<long>(result), modulus_};
}

PrimeFieldElement PrimeFieldElement::operator-() const {
    return {static_cast<long>((modulus_ - residue_) % modulus_), modulus_};
}

PrimeFieldElement& PrimeFieldElement::operator+=(const PrimeFieldElement& o) {
    check_same(o);
    residue_ = (residue_ + o.residue_) % modulus_;
    return *this;
}

PrimeFieldElement& PrimeFieldElement::operator-=(const PrimeFieldElement& o) {
    check_same(o);
    residue_ = (residue_ + modulus_ - o.residue_) % modulus_;
    return *this;
}

PrimeFieldElement& PrimeFieldElement::operator*=(const PrimeFieldElement& o) {
    check_same(o);
    residue_ = residue_ * o.residue_ % modulus_;
    return *this;
}

PrimeFieldElement& PrimeFieldElement::operator/=(const PrimeFieldElement& o) {
    check_same(o);
    return *this *= o.inverse();
}

std::string PrimeFieldElement::to_string() const {
    return std::to_string(residue_) + " mod " + std::to_string(modulus_);
}

// ---------------------------------------------------------------- FieldTag

FieldTag FieldTag::prime(std::uint32_t p) {
    if (p > PrimeFieldElement::kMaxModulus || !is_prime(p))
        throw Error(ErrorKind::InvalidArgument, "modulus must be a prime <= 97, got " + std::to_string(p));
    return {FieldKind::Prime, p};
}

std::string FieldTag::to_string() const {
    switch (kind) {
        case FieldKind::Rational: return "Q";
        case FieldKind::Gaussian: return "Q(i)";
        case FieldKind::Prime: return "GF(" + std::to_string(modulus) + ")";
    }
    return "?";
}

FieldTag FieldTag::parse(std::string_view text) {
    std::string s = strip(text);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
    if (s == "Q" || s == "RATIONAL") return rationals();
    if (s == "Q(I)" || s == "QI" || s == "GAUSSIAN") return gaussian();
    if (s.rfind("GF", 0) == 0) {
        std::string digits = s.substr(2);
        if (!digits.empty() && digits.front() == '(' && digits.back() == ')')
            digits = digits.substr(1, digits.size() - 2);
        if (is_digits(digits) && digits.size() <= 3) return prime(static_cast<std::uint32_t>(std::stoul(digits)));
    }
    throw Error(ErrorKind::ParseError, "unknown field '" + std::string(text) + "'");
}

// ------------------------------------------------------------------ Scalar

Scalar Scalar::from_int(FieldTag field, long value) {
    switch (field.kind) {
        case FieldKind::Rational: return Rational(value);
        case FieldKind::Gaussian: return GaussianRational(Rational(value));
        case FieldKind::Prime: return PrimeFieldElement(value, field.modulus);
    }
    return Rational(value);
}

Scalar Scalar::from_rational(FieldTag field, const Rational& value) {
    switch (field.kind) {
        case FieldKind::Rational: return value;
        case FieldKind::Gaussian: return GaussianRational(value);
        case FieldKind::Prime: {
            const mpz_class p = field.modulus;
            mpz_class num = value.numerator() % p;
            mpz_class den = value.denominator() % p;
            const PrimeFieldElement n(num.get_si(), field.modulus);
            const PrimeFieldElement d(den.get_si(), field.modulus);
            return n / d;
        }
    }
    return value;
}

Scalar Scalar::parse(std::string_view text) {
    const std::string s = strip(text);
    if (const auto pos = s.find("mod"); pos != std::string::npos) {
        const std::string value = s.substr(0, pos);
        const std::string mod = s.substr(pos + 3);
        if (!is_integer_token(value) || !is_digits(mod) || mod.size() > 3)
            throw Error(ErrorKind::ParseError, "bad prime-field scalar '" + std::string(text) + "'");
        const auto p = static_cast<std::uint32_t>(std::stoul(mod));
        const mpz_class v(value[0] == '+' ? value.substr(1) : value, 10);
        const mpz_class r = ((v % p) + p) % p;
        return PrimeFieldElement(r.get_si(), FieldTag::prime(p).modulus);
    }
    if (!s.empty() && s.back() == 'i') return GaussianRational::parse(s);
    return Rational::parse(s);
}

Scalar Scalar::parse(std::string_view text, FieldTag field) {
    Scalar raw = parse(text);
    if (raw.field() == field) return raw;
    if (const Rational* q = raw.as_rational()) return from_rational(field, *q);
    throw Error(ErrorKind::FieldMismatch, "'" + std::string(text) + "' is not an element of " + field.to_string());
}

FieldTag Scalar::field() const {
    return std::visit(
        [](const auto& v) -> FieldTag {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Rational>) return FieldTag::rationals();
            else if constexpr (std::is_same_v<T, GaussianRational>) return FieldTag::gaussian();
            else return FieldTag{FieldKind::Prime, v.modulus()};
        },
        value_);
}

bool Scalar::is_zero() const {
    return std::visit([](const auto& v) { return v.is_zero(); }, value_);
}

std::optional<Rational> Scalar::real_value() const {
    if (const auto* q = as_rational()) return *q;
    if (const auto* g = as_gaussian(); g && g->is_real()) return g->re();
    return std::nullopt;
}

Scalar Scalar::conj() const {
    if (const auto* g = as_gaussian()) return g->conj();
    return *this;
}

Scalar Scalar::inverse() const { return one(field()) / *this; }

Scalar Scalar::operator-() const {
    return std::visit([](const auto& v) -> Scalar { return -v; }, value_);
}

namespace {

template <typename Op>
void combine(Scalar::Storage& lhs, const Scalar::Storage& rhs, Op op) {
    if (lhs.index() != rhs.index())
        throw Error(ErrorKind::FieldMismatch, "scalars from different fields");
    std::visit(
        [&](auto& a) {
            using T = std::decay_t<decltype(a)>;
            op(a, std::get<T>(rhs));
        },
        lhs);
}

}  // namespace

Scalar& Scalar::operator+=(const Scalar& o) {
    combine(value_, o.value_, [](auto& a, const auto& b) { a += b; });
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    combine(value_, o.value_, [](auto& a, const auto& b) { a -= b; });
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    combine(value_, o.value_, [](auto& a, const auto& b) { a *= b; });
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    combine(value_, o.value_, [](auto& a, const auto& b) { a /= b; });
    return *this;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    if (a.value_.index() != b.value_.index()) return a.value_.index() <=> b.value_.index();
    return std::visit(
        [&](const auto& x) -> std::strong_ordering {
            using T = std::decay_t<decltype(x)>;
            return x <=> std::get<T>(b.value_);
        },
        a.value_);
}

std::string Scalar::to_string() const {
    return std::visit([](const auto& v) { return v.to_string(); }, value_);
}

}  // namespace qlogic
