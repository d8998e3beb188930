// Exact field scalars: rationals or a prime field F_p, fixed per diagram.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "heckeq/errors.hpp"

namespace heckeq {

using Rational = boost::multiprecision::cpp_rational;

struct FieldSpec {
    enum class Kind { rational, fp };

    Kind kind = Kind::rational;
    std::uint32_t p = 0; // modulus when kind == fp

    static FieldSpec rationals() { return FieldSpec{}; }
    static FieldSpec prime_field(std::uint32_t p); // rejects non-primes

    std::uint32_t characteristic() const { return kind == Kind::fp ? p : 0; }
    bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    std::string str() const;
};

class Scalar {
public:
    Scalar() : field_(FieldSpec::rationals()), rat_(0) {}

    static Scalar zero(const FieldSpec& f);
    static Scalar one(const FieldSpec& f);
    static Scalar from_int(const FieldSpec& f, long long v);
    static Scalar from_rational(Rational v); // rational field only

    // Accepts integers ("-3"), fractions ("2/3"), and residues mod p.
    static Scalar parse(const FieldSpec& f, const std::string& text);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const; // division by zero is a domain error
    Scalar operator-() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Underlying value accessors (valid for the matching field kind).
    const Rational& rational_value() const { return rat_; }
    std::uint32_t residue() const { return res_; }

    std::string str() const;

private:
    Scalar(FieldSpec f) : field_(f), rat_(0) {}
    void check_same_field(const Scalar& o) const;

    FieldSpec field_;
    Rational rat_;            // kind == rational
    std::uint32_t res_ = 0;   // kind == fp, canonical residue in [0, p)
};

} // namespace heckeq
