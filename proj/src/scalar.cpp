#include "heckeq/scalar.hpp"

#include <cctype>
#include <sstream>

namespace heckeq {

namespace {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::uint32_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
    if (a == 0) fail_domain("division by zero in F_" + std::to_string(p));
    return mod_pow(a, p - 2, p); // p prime
}

std::uint32_t reduce_mod(long long v, std::uint32_t p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t reduce_big_mod(const boost::multiprecision::cpp_int& v, std::uint32_t p) {
    boost::multiprecision::cpp_int r = v % p;
    if (r < 0) r += p;
    return r.convert_to<std::uint32_t>();
}

} // namespace

FieldSpec FieldSpec::prime_field(std::uint32_t p) {
    if (!is_prime_u32(p)) fail_domain("field modulus " + std::to_string(p) + " is not prime");
    FieldSpec f;
    f.kind = Kind::fp;
    f.p = p;
    return f;
}

std::string FieldSpec::str() const {
    return kind == Kind::rational ? "rational" : "fp " + std::to_string(p);
}

Scalar Scalar::zero(const FieldSpec& f) { return Scalar(f); }

Scalar Scalar::one(const FieldSpec& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const FieldSpec& f, long long v) {
    Scalar s(f);
    if (f.kind == FieldSpec::Kind::rational)
        s.rat_ = v;
    else
        s.res_ = reduce_mod(v, f.p);
    return s;
}

Scalar Scalar::from_rational(Rational v) {
    Scalar s(FieldSpec::rationals());
    s.rat_ = std::move(v);
    return s;
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
    auto bad = [&]() -> void { fail_domain("cannot parse scalar '" + text + "' in field " + f.str()); };

    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) bad();

    auto parse_int = [&](const std::string& s) -> boost::multiprecision::cpp_int {
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) bad();
        for (std::size_t j = i; j < s.size(); ++j)
            if (!std::isdigit(static_cast<unsigned char>(s[j]))) bad();
        return boost::multiprecision::cpp_int(s);
    };

    std::size_t slash = t.find('/');
    boost::multiprecision::cpp_int num, den = 1;
    if (slash == std::string::npos) {
        num = parse_int(t);
    } else {
        num = parse_int(t.substr(0, slash));
        den = parse_int(t.substr(slash + 1));
        if (den == 0) fail_domain("zero denominator in scalar '" + text + "'");
    }

    Scalar s(f);
    if (f.kind == FieldSpec::Kind::rational) {
        s.rat_ = Rational(num, den);
    } else {
        std::uint32_t d = reduce_big_mod(den, f.p);
        if (d == 0) fail_domain("denominator of '" + text + "' vanishes in " + f.str());
        s.res_ = static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(reduce_big_mod(num, f.p)) * mod_inverse(d, f.p) % f.p);
    }
    return s;
}

bool Scalar::is_zero() const {
    return field_.kind == FieldSpec::Kind::rational ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
    return field_.kind == FieldSpec::Kind::rational ? rat_ == 1 : res_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (field_ != o.field_) fail_domain("scalar arithmetic across distinct fields");
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar s(field_);
    if (field_.kind == FieldSpec::Kind::rational)
        s.rat_ = rat_ + o.rat_;
    else
        s.res_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(res_) + o.res_) % field_.p);
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    Scalar s(field_);
    if (field_.kind == FieldSpec::Kind::rational)
        s.rat_ = rat_ - o.rat_;
    else
        s.res_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(res_) + field_.p - o.res_) % field_.p);
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar s(field_);
    if (field_.kind == FieldSpec::Kind::rational)
        s.rat_ = rat_ * o.rat_;
    else
        s.res_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(res_) * o.res_ % field_.p);
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_field(o);
    if (o.is_zero()) fail_domain("scalar division by zero");
    Scalar s(field_);
    if (field_.kind == FieldSpec::Kind::rational)
        s.rat_ = rat_ / o.rat_;
    else
        s.res_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(res_) * mod_inverse(o.res_, field_.p) % field_.p);
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s(field_);
    if (field_.kind == FieldSpec::Kind::rational)
        s.rat_ = -rat_;
    else
        s.res_ = res_ == 0 ? 0 : field_.p - res_;
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    return field_.kind == FieldSpec::Kind::rational ? rat_ == o.rat_ : res_ == o.res_;
}

std::string Scalar::str() const {
    if (field_.kind == FieldSpec::Kind::rational) {
        std::ostringstream os;
        os << rat_;
        return os.str();
    }
    return std::to_string(res_);
}

} // namespace heckeq
