#include "kstab/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "kstab/error.hpp"

namespace kstab {

namespace {

bool is_integer_literal(std::string_view text) {
    if (text.empty()) return false;
    std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
    if (start == text.size()) return false;
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    }
    return true;
}

BigInt parse_integer(std::string_view text) {
    if (!is_integer_literal(text)) throw ParseError("not an integer: '" + std::string(text) + "'");
    if (text.front() == '+') text.remove_prefix(1);
    return BigInt(std::string(text), 10);
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) : q_(num, den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

Rational Rational::parse_canonical(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        throw ParseError("rational '" + std::string(text) + "' lacks an explicit denominator");
    }
    auto num_text = text.substr(0, slash);
    auto den_text = text.substr(slash + 1);
    if (num_text.empty() || num_text.front() == '+' || den_text.empty() || !std::isdigit(static_cast<unsigned char>(den_text.front()))) {
        throw ParseError("non-canonical rational '" + std::string(text) + "'");
    }
    Rational value = parse(text);
    if (value.to_fraction_string() != text) {
        throw ParseError("non-canonical rational '" + std::string(text) + "'");
    }
    return value;
}

std::string Rational::to_string() const { return q_.get_str(); }

std::string Rational::to_fraction_string() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::to_decimal_string(unsigned places) const {
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
    BigInt num = abs(q_.get_num()) * scale;
    BigInt den = q_.get_den();
    BigInt quotient = num / den;
    BigInt remainder = num % den;
    if (2 * remainder >= den) quotient += 1;

    std::string digits = quotient.get_str();
    if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
    std::string out = sign() < 0 && quotient != 0 ? "-" : "";
    out += digits.substr(0, digits.size() - places);
    if (places > 0) out += "." + digits.substr(digits.size() - places);
    return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
    q_ += rhs.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    q_ -= rhs.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    q_ *= rhs.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("rational division by zero");
    q_ /= rhs.q_;
    return *this;
}

Rational Rational::operator-() const {
    Rational out;
    out.q_ = -q_;
    return out;
}

Rational pow(const Rational& base, long exponent) {
    if (exponent < 0) return Rational(1) / pow(base, -exponent);
    Rational result(1);
    Rational square = base;
    for (auto e = static_cast<unsigned long>(exponent); e != 0; e >>= 1) {
        if (e & 1UL) result *= square;
        if (e > 1) square *= square;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

}  // namespace kstab
