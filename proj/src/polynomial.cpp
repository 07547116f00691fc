#include "kstab/polynomial.hpp"

#include <ostream>
#include <set>
#include <sstream>

#include "kstab/error.hpp"

namespace kstab {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t power) {
    std::vector<Rational> coeffs(power + 1);
    coeffs[power] = c;
    return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : Rational();
}

Rational Polynomial::operator()(const Rational& k) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * k + *it;
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> product(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) product[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(product);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    trim();
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        Rational magnitude = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = magnitude == Rational(1);
        if (i == 0 || !unit) os << magnitude;
        if (i > 0) {
            if (!unit) os << "*";
            os << "k";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

BigInt binom(std::uint64_t a, std::uint64_t b) {
    if (b > a) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), a, b);
    return out;
}

Polynomial binom_poly(unsigned m, unsigned step, long shift) {
    Polynomial result{Rational(1)};
    BigInt factorial = 1;
    for (unsigned i = 1; i <= m; ++i) {
        // linear factor step*k + (shift - m + i)
        result *= Polynomial{Rational(shift - static_cast<long>(m) + static_cast<long>(i)), Rational(static_cast<long>(step))};
        factorial *= i;
    }
    return result * Rational(1, factorial);
}

Polynomial interpolate(std::span<const Sample> samples) {
    if (samples.empty()) throw MalformedSamples("interpolation needs at least one sample");
    std::set<long> seen;
    for (const auto& s : samples) {
        if (!seen.insert(s.node).second) {
            throw MalformedSamples("duplicate interpolation node " + std::to_string(s.node));
        }
    }

    // Newton divided differences, then expand the Newton form.
    const std::size_t count = samples.size();
    std::vector<Rational> diff(count);
    for (std::size_t i = 0; i < count; ++i) diff[i] = samples[i].value;
    for (std::size_t level = 1; level < count; ++level) {
        for (std::size_t i = count - 1; i >= level; --i) {
            Rational span(samples[i].node - samples[i - level].node);
            diff[i] = (diff[i] - diff[i - 1]) / span;
        }
    }

    Polynomial result;
    for (std::size_t i = count; i-- > 0;) {
        result *= Polynomial{Rational(-samples[i].node), Rational(1)};
        result += Polynomial{diff[i]};
    }
    return result;
}

std::pair<Rational, Rational> leading_two(const Polynomial& p, unsigned expected_degree) {
    if (p.degree() != static_cast<int>(expected_degree)) {
        throw DegreeMismatch("expected a polynomial of degree " + std::to_string(expected_degree) + ", got degree " +
                             std::to_string(p.degree()) + ": " + p.to_string());
    }
    Rational second = expected_degree == 0 ? Rational() : p.coefficient(expected_degree - 1);
    return {p.coefficient(expected_degree), second};
}

}  // namespace kstab
