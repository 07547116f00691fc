#pragma once

#include <string>
#include <variant>

#include "kstab/bigraded.hpp"
#include "kstab/certificate.hpp"
#include "kstab/geometry.hpp"
#include "kstab/polynomial.hpp"

namespace kstab {

/// O_X(d, e) with d, e >= 1.
struct Polarization {
    unsigned d;
    unsigned e;

    Polarization(unsigned d_, unsigned e_);
    friend bool operator==(const Polarization&, const Polarization&) = default;
};

/// N_k = a0 k^{N} + a1 k^{N-1} + ..., w_k = b0 k^{N+1} + b1 k^{N} + ..., N = m + n - 1.
struct ExpansionCoefficients {
    Rational a0;
    Rational a1;
    Rational b0;
    Rational b1;

    friend bool operator==(const ExpansionCoefficients&, const ExpansionCoefficients&) = default;
};

struct DFValue {
    Rational value;

    friend bool operator==(const DFValue&, const DFValue&) = default;
};

/// Hilbert polynomial k -> N_k of (X, O(d, e)). Built from binomial polynomials
/// and cross-checked against interpolation of enumerated N_1..N_{m+n+1}.
/// Throws InvariantViolation if the two disagree.
Polynomial hilbert_poly(const AmbientShape& shape, const Polarization& pol, std::uint64_t cap = enumeration_cap());

/// Weight polynomial k -> w_k = -alpha * C(dk-1+m, m) * C(ek-1+n, n), cross-checked
/// against interpolation of restricted_census at k = 1..m+n+1.
/// Throws NotSpecialLinear if lambda is not in SL x SL, InvariantViolation on disagreement.
Polynomial weight_poly(const AmbientShape& shape, const Polarization& pol, const OneParameterSubgroup& lambda,
                       long alpha, std::uint64_t cap = enumeration_cap());

/// w_k + c * k * N_k: the weight polynomial after twisting the linearization by a character of weight c.
Polynomial twist_weight_poly(const Polynomial& weight, const Polynomial& hilbert, long c);

/// a0 = d^{m-1} e^{n-1} (me + nd) / (m! n!)
/// a1 = d^{m-2} e^{n-2} (m^2(m-1) e^2 + mn(m+n) de + n^2(n-1) d^2) / (2 m! n!)
/// b0 = -d^m e^n alpha / (m! n!)
/// b1 = -d^{m-1} e^{n-1} (m(m-1) e + n(n-1) d) alpha / (2 m! n!)
ExpansionCoefficients closed_form_coefficients(const AmbientShape& shape, const Polarization& pol, long alpha);

/// Leading two coefficients of hilbert_poly and weight_poly. Throws InvariantViolation
/// if they differ from closed_form_coefficients.
ExpansionCoefficients expansion(const AmbientShape& shape, const Polarization& pol,
                                const OneParameterSubgroup& lambda, long alpha,
                                std::uint64_t cap = enumeration_cap());

/// Same extraction without the closed-form comparison.
ExpansionCoefficients expansion_from_polynomials(const AmbientShape& shape, const Polynomial& hilbert,
                                                 const Polynomial& weight);

/// DF = 2 (a1 b0 - a0 b1) / a0^2. Throws Error when a0 <= 0.
DFValue df_general(const ExpansionCoefficients& c);

/// DF = -2 m n d e alpha / (m e + n d)^2.
DFValue df_closed(const AmbientShape& shape, const Polarization& pol, long alpha);

struct Inconclusive {
    std::string reason;
};

using InstabilityDecision = std::variant<Certificate, Inconclusive>;

/// Builds and checks the destabilizing certificate when m != n or X is singular;
/// returns Inconclusive for smooth X with m = n. Throws NotNormal when r = 0.
InstabilityDecision decide_instability(const NormalForm& nf, const Polarization& pol,
                                       std::uint64_t cap = enumeration_cap());

}  // namespace kstab
