#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kstab/rational.hpp"

namespace kstab {

inline constexpr std::string_view kCertificateSchemaVersion = "kstab-certificate/1";

/// Self-contained witness that (X, O(d, e)) is K-unstable: the normal form,
/// the polarization, a one-parameter subgroup, and the expansion data and
/// Donaldson-Futaki invariant it produces.
///
/// Integer fields are signed so that tampered or malformed certificates can
/// still be represented and rejected by verify().
struct Certificate {
    std::string schema_version{kCertificateSchemaVersion};
    long m = 0;
    long n = 0;
    long r = 0;
    long d = 0;
    long e = 0;
    std::vector<long> lambda_u;
    std::vector<long> lambda_v;
    long alpha = 0;
    Rational a0;
    Rational a1;
    Rational b0;
    Rational b1;
    Rational df;
    bool factor_swapped = false;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct CheckFailure {
    std::string check;
    std::string expected;
    std::string found;
};

struct Verdict {
    std::vector<CheckFailure> failures;
    /// Informational remarks, e.g. pieces too large to enumerate.
    std::vector<std::string> notes;

    bool ok() const { return failures.empty(); }
};

/// Throws InvariantViolation naming the first broken structural invariant
/// (SL sums, rank range, hypothesis, sign of df, closed-form value of df).
void check_invariants(const Certificate& cert);

/// Canonical JSON text: keys sorted, one key per line with two-space indent,
/// `"key": value`, arrays inline without spaces, rationals as reduced "num/den"
/// strings, trailing newline. Throws InvariantViolation if check_invariants fails.
std::string emit(const Certificate& cert);

/// Strict parse of certificate JSON. Throws ParseError on malformed JSON, on a
/// missing, extra or mistyped key, on an unknown schema_version, or on a
/// rational that is not in canonical "num/den" form.
Certificate parse_certificate(std::string_view text);

/// Re-derives every claim from scratch: SL sums, that lambda is the canonical
/// destabilizer of the stated normal form, alpha from the normal form,
/// N_k and w_k by monomial enumeration at k = 1..m+n+1, interpolation, the
/// expansion coefficients, DF from its definition, and finally the closed form.
Verdict verify(const Certificate& cert);

/// parse_certificate followed by verify. ParseError propagates.
Verdict verify(std::string_view text);

}  // namespace kstab
