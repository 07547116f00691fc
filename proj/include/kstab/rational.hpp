#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace kstab {

using BigInt = mpz_class;

/// Exact rational number, always stored in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. Every constructor canonicalizes, so
/// two Rationals compare equal iff their numerators and denominators agree.
class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den);

    /// Parses "p/q" or a plain integer "p". Throws ParseError on anything else
    /// or on a zero denominator. Non-reduced input such as "2/4" is accepted and reduced.
    static Rational parse(std::string_view text);

    /// Like parse, but only accepts the canonical "p/q" spelling emitted by
    /// to_fraction_string: explicit denominator, reduced, positive denominator.
    static Rational parse_canonical(std::string_view text);

    BigInt numerator() const { return BigInt(q_.get_num()); }
    BigInt denominator() const { return BigInt(q_.get_den()); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    /// "-4/9", or "3" for integers.
    std::string to_string() const;
    /// Always "num/den", e.g. "1/1", "0/1", "-4/9".
    std::string to_fraction_string() const;
    /// Exact rounding (half away from zero) to the given number of decimal places.
    std::string to_decimal_string(unsigned places) const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return cmp(lhs.q_, rhs.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        return cmp(lhs.q_, rhs.q_) <=> 0;
    }

    const mpq_class& raw() const { return q_; }

private:
    mpq_class q_;
};

/// base^exponent for any integer exponent; base must be nonzero when exponent < 0.
Rational pow(const Rational& base, long exponent);

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace kstab
