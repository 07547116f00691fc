#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kstab/rational.hpp"

namespace kstab {

/// Univariate polynomial in k with exact rational coefficients.
///
/// coefficient(i) multiplies k^i. Trailing zeros are stripped on construction,
/// so the zero polynomial has no coefficients and degree() == -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);
    Polynomial(std::initializer_list<Rational> coefficients)
        : Polynomial(std::vector<Rational>(coefficients)) {}

    /// c * k^power
    static Polynomial monomial(const Rational& c, std::size_t power);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational coefficient(std::size_t power) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational operator()(const Rational& k) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& scalar);

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(Polynomial lhs, const Polynomial& rhs) { return lhs *= rhs; }
    friend Polynomial operator*(Polynomial lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Polynomial operator*(const Rational& lhs, Polynomial rhs) { return rhs *= lhs; }
    Polynomial operator-() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Human-readable form, highest power first: "3/2*k^2 + 5/2*k + 1".
    std::string to_string() const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Binomial coefficient C(a, b); zero when b > a.
BigInt binom(std::uint64_t a, std::uint64_t b);

/// The polynomial p with p(k) = C(step*k + shift, m) whenever step*k + shift >= 0,
/// i.e. prod_{i=1..m} (step*k + shift - m + i) / m!.
Polynomial binom_poly(unsigned m, unsigned step, long shift);

struct Sample {
    long node;
    Rational value;
};

/// Unique polynomial of degree < samples.size() through every sample.
/// Throws MalformedSamples on an empty sample set or repeated nodes.
Polynomial interpolate(std::span<const Sample> samples);

/// Top two coefficients (of k^d and k^(d-1)) of a polynomial of degree exactly d.
/// Throws DegreeMismatch when the degree differs.
std::pair<Rational, Rational> leading_two(const Polynomial& p, unsigned expected_degree);

}  // namespace kstab
