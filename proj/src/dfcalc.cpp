#include "kstab/dfcalc.hpp"

#include <vector>

#include "kstab/error.hpp"

namespace kstab {

namespace {

BigInt factorial(unsigned n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

unsigned node_count(const AmbientShape& shape) { return shape.m + shape.n + 1; }

}  // namespace

Polarization::Polarization(unsigned d_, unsigned e_) : d(d_), e(e_) {
    if (d == 0 || e == 0) throw Error("polarization O(d, e) needs d, e >= 1");
}

Polynomial hilbert_poly(const AmbientShape& shape, const Polarization& pol, std::uint64_t cap) {
    const long m = shape.m;
    const long n = shape.n;
    const Polynomial top = binom_poly(shape.m, pol.d, m) * binom_poly(shape.n, pol.e, n);
    const Polynomial sub = binom_poly(shape.m, pol.d, m - 1) * binom_poly(shape.n, pol.e, n - 1);
    const Polynomial closed = top - sub;

    const auto trivial = OneParameterSubgroup::trivial(shape);
    std::vector<Sample> samples;
    for (unsigned k = 1; k <= node_count(shape); ++k) {
        samples.push_back({static_cast<long>(k), Rational(restricted_census(shape, pol.d, pol.e, k, trivial, 0, cap).dimension)});
    }
    const Polynomial interpolated = interpolate(samples);
    if (interpolated != closed) {
        throw InvariantViolation("Hilbert polynomial mismatch: binomial route gives " + closed.to_string() +
                                 ", enumeration route gives " + interpolated.to_string());
    }
    if (closed.degree() != static_cast<int>(shape.m + shape.n - 1)) {
        throw DegreeMismatch("Hilbert polynomial has degree " + std::to_string(closed.degree()) + ", expected " +
                             std::to_string(shape.m + shape.n - 1));
    }
    return closed;
}

Polynomial weight_poly(const AmbientShape& shape, const Polarization& pol, const OneParameterSubgroup& lambda,
                       long alpha, std::uint64_t cap) {
    lambda.require_fits(shape);
    if (auto violation = lambda.special_linear_violation()) {
        throw NotSpecialLinear("SL condition violated: " + *violation);
    }
    const long m = shape.m;
    const long n = shape.n;
    const Polynomial closed =
        binom_poly(shape.m, pol.d, m - 1) * binom_poly(shape.n, pol.e, n - 1) * Rational(-alpha);

    std::vector<Sample> samples;
    for (unsigned k = 1; k <= node_count(shape); ++k) {
        samples.push_back({static_cast<long>(k), Rational(restricted_census(shape, pol.d, pol.e, k, lambda, alpha, cap).total_weight)});
    }
    const Polynomial interpolated = interpolate(samples);
    if (interpolated != closed) {
        throw InvariantViolation("weight polynomial mismatch: binomial route gives " + closed.to_string() +
                                 ", enumeration route gives " + interpolated.to_string());
    }
    return closed;
}

Polynomial twist_weight_poly(const Polynomial& weight, const Polynomial& hilbert, long c) {
    return weight + Polynomial::monomial(Rational(c), 1) * hilbert;
}

ExpansionCoefficients closed_form_coefficients(const AmbientShape& shape, const Polarization& pol, long alpha) {
    const Rational m = static_cast<long>(shape.m);
    const Rational n = static_cast<long>(shape.n);
    const Rational d = static_cast<long>(pol.d);
    const Rational e = static_cast<long>(pol.e);
    const long mi = shape.m;
    const long ni = shape.n;
    const Rational factorials = Rational(factorial(shape.m) * factorial(shape.n));
    const Rational a = Rational(alpha);

    ExpansionCoefficients c;
    c.a0 = pow(d, mi - 1) * pow(e, ni - 1) * (m * e + n * d) / factorials;
    c.a1 = pow(d, mi - 2) * pow(e, ni - 2) *
           (m * m * (m - 1) * e * e + m * n * (m + n) * d * e + n * n * (n - 1) * d * d) / (Rational(2) * factorials);
    c.b0 = -(pow(d, mi) * pow(e, ni) * a) / factorials;
    c.b1 = -(pow(d, mi - 1) * pow(e, ni - 1) * (m * (m - 1) * e + n * (n - 1) * d) * a) / (Rational(2) * factorials);
    return c;
}

ExpansionCoefficients expansion_from_polynomials(const AmbientShape& shape, const Polynomial& hilbert,
                                                 const Polynomial& weight) {
    const unsigned dim = shape.m + shape.n - 1;
    ExpansionCoefficients c;
    std::tie(c.a0, c.a1) = leading_two(hilbert, dim);
    if (!weight.is_zero()) std::tie(c.b0, c.b1) = leading_two(weight, dim + 1);
    return c;
}

ExpansionCoefficients expansion(const AmbientShape& shape, const Polarization& pol,
                                const OneParameterSubgroup& lambda, long alpha, std::uint64_t cap) {
    const ExpansionCoefficients extracted =
        expansion_from_polynomials(shape, hilbert_poly(shape, pol, cap), weight_poly(shape, pol, lambda, alpha, cap));
    const ExpansionCoefficients expected = closed_form_coefficients(shape, pol, alpha);
    auto check = [](const char* name, const Rational& got, const Rational& want) {
        if (got != want) {
            throw InvariantViolation(std::string("expansion coefficient ") + name + " is " + got.to_string() +
                                     ", closed form gives " + want.to_string());
        }
    };
    check("a0", extracted.a0, expected.a0);
    check("a1", extracted.a1, expected.a1);
    check("b0", extracted.b0, expected.b0);
    check("b1", extracted.b1, expected.b1);
    return extracted;
}

DFValue df_general(const ExpansionCoefficients& c) {
    if (c.a0.sign() <= 0) throw Error("degenerate Hilbert data: a0 = " + c.a0.to_string() + " is not positive");
    return {Rational(2) * (c.a1 * c.b0 - c.a0 * c.b1) / (c.a0 * c.a0)};
}

DFValue df_closed(const AmbientShape& shape, const Polarization& pol, long alpha) {
    const long m = shape.m;
    const long n = shape.n;
    const long d = pol.d;
    const long e = pol.e;
    const Rational denominator = pow(Rational(m * e + n * d), 2);
    return {Rational(-2 * m * n * d * e) * Rational(alpha) / denominator};
}

InstabilityDecision decide_instability(const NormalForm& nf, const Polarization& pol, std::uint64_t cap) {
    if (!is_normal(nf)) throw NotNormal("not normal: r = 0");
    if (!instability_hypothesis_holds(nf)) {
        return Inconclusive{"m = n and X is smooth: no destabilizing subgroup is constructed, no verdict"};
    }

    const DestabilizingSubgroup destab = destabilizer(nf);
    const long alpha = semiinvariant_alpha(nf, destab.lambda).alpha;
    if (alpha != 1) {
        throw InvariantViolation("destabilizer has weight " + std::to_string(alpha) + " on f, expected 1");
    }
    const ExpansionCoefficients coeffs = expansion(nf.shape, pol, destab.lambda, alpha, cap);
    const DFValue general = df_general(coeffs);
    const DFValue closed = df_closed(nf.shape, pol, alpha);
    if (general != closed) {
        throw InvariantViolation("DF mismatch: definition gives " + general.value.to_string() +
                                 ", closed form gives " + closed.value.to_string());
    }
    if (general.value.sign() >= 0) {
        throw InvariantViolation("destabilizer produced non-negative DF " + general.value.to_string());
    }

    Certificate cert;
    cert.m = nf.shape.m;
    cert.n = nf.shape.n;
    cert.r = nf.r;
    cert.d = pol.d;
    cert.e = pol.e;
    cert.lambda_u = destab.lambda.u();
    cert.lambda_v = destab.lambda.v();
    cert.alpha = alpha;
    cert.a0 = coeffs.a0;
    cert.a1 = coeffs.a1;
    cert.b0 = coeffs.b0;
    cert.b1 = coeffs.b1;
    cert.df = general.value;
    cert.factor_swapped = destab.factor_swapped;
    return cert;
}

}  // namespace kstab
