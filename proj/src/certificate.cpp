#include "kstab/certificate.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "kstab/dfcalc.hpp"
#include "kstab/error.hpp"

namespace kstab {

namespace {

using nlohmann::json;

const std::set<std::string>& certificate_keys() {
    static const std::set<std::string> keys{"a0", "a1",       "alpha", "b0", "b1", "d", "df", "e", "factor_swapped",
                                            "lambda_u", "lambda_v", "m", "n", "r", "schema_version"};
    return keys;
}

std::string render_list(const std::vector<long>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(values[i]);
    }
    return out + "]";
}

std::string quoted(const std::string& text) { return json(text).dump(); }

long as_integer(const json& value, const std::string& key) {
    if (value.is_number_integer() && !value.is_number_unsigned()) return value.get<long>();
    if (value.is_number_unsigned() &&
        value.get<std::uint64_t>() <= static_cast<std::uint64_t>(std::numeric_limits<long>::max())) {
        return static_cast<long>(value.get<std::uint64_t>());
    }
    throw ParseError("field '" + key + "' must hold 64-bit integers");
}

long read_integer(const json& doc, const std::string& key) { return as_integer(doc.at(key), key); }

std::vector<long> read_integer_list(const json& doc, const std::string& key) {
    const json& value = doc.at(key);
    if (!value.is_array()) throw ParseError("field '" + key + "' must be an array of integers");
    std::vector<long> out;
    for (const auto& item : value) out.push_back(as_integer(item, key));
    return out;
}

Rational read_rational(const json& doc, const std::string& key) {
    const json& value = doc.at(key);
    if (!value.is_string()) throw ParseError("field '" + key + "' must be a \"num/den\" string");
    try {
        return Rational::parse_canonical(value.get<std::string>());
    } catch (const ParseError& err) {
        throw ParseError("field '" + key + "': " + err.what());
    }
}

long sum(const std::vector<long>& values) { return std::accumulate(values.begin(), values.end(), 0L); }

class FailureLog {
public:
    void fail(std::string check, std::string expected, std::string found) {
        verdict_.failures.push_back({std::move(check), std::move(expected), std::move(found)});
    }
    void expect_equal(const std::string& check, const Rational& expected, const Rational& found) {
        if (expected != found) fail(check, expected.to_string(), found.to_string());
    }
    void expect_equal(const std::string& check, long expected, long found) {
        if (expected != found) fail(check, std::to_string(expected), std::to_string(found));
    }
    void note(std::string text) { verdict_.notes.push_back(std::move(text)); }
    Verdict take() { return std::move(verdict_); }

private:
    Verdict verdict_;
};

}  // namespace

void check_invariants(const Certificate& cert) {
    auto violated = [](const std::string& what) { throw InvariantViolation("certificate invariant violated: " + what); };
    if (cert.schema_version != kCertificateSchemaVersion) violated("unknown schema_version " + cert.schema_version);
    if (cert.m < 1 || cert.n < 1) violated("m, n must be >= 1");
    if (cert.d < 1 || cert.e < 1) violated("d, e must be >= 1");
    const long min_dim = std::min(cert.m, cert.n);
    if (cert.r < 1 || cert.r > min_dim) violated("r must lie in [1, min(m, n)]");
    if (cert.m == cert.n && cert.r == min_dim) violated("m = n and r = min(m, n)");
    if (cert.lambda_u.size() != static_cast<std::size_t>(cert.m + 1) ||
        cert.lambda_v.size() != static_cast<std::size_t>(cert.n + 1)) {
        violated("weight vector lengths must be m+1 and n+1");
    }
    if (sum(cert.lambda_u) != 0) violated("sum(lambda_u) = " + std::to_string(sum(cert.lambda_u)));
    if (sum(cert.lambda_v) != 0) violated("sum(lambda_v) = " + std::to_string(sum(cert.lambda_v)));
    if (cert.df.sign() >= 0) violated("df = " + cert.df.to_string() + " is not negative");
    const AmbientShape shape(static_cast<unsigned>(cert.m), static_cast<unsigned>(cert.n));
    const Polarization pol(static_cast<unsigned>(cert.d), static_cast<unsigned>(cert.e));
    const Rational closed = df_closed(shape, pol, cert.alpha).value;
    if (cert.df != closed) violated("df = " + cert.df.to_string() + " but the closed form gives " + closed.to_string());
}

std::string emit(const Certificate& cert) {
    check_invariants(cert);
    const std::map<std::string, std::string> fields{
        {"a0", quoted(cert.a0.to_fraction_string())},
        {"a1", quoted(cert.a1.to_fraction_string())},
        {"alpha", std::to_string(cert.alpha)},
        {"b0", quoted(cert.b0.to_fraction_string())},
        {"b1", quoted(cert.b1.to_fraction_string())},
        {"d", std::to_string(cert.d)},
        {"df", quoted(cert.df.to_fraction_string())},
        {"e", std::to_string(cert.e)},
        {"factor_swapped", cert.factor_swapped ? "true" : "false"},
        {"lambda_u", render_list(cert.lambda_u)},
        {"lambda_v", render_list(cert.lambda_v)},
        {"m", std::to_string(cert.m)},
        {"n", std::to_string(cert.n)},
        {"r", std::to_string(cert.r)},
        {"schema_version", quoted(cert.schema_version)},
    };
    std::string out = "{\n";
    std::size_t index = 0;
    for (const auto& [key, value] : fields) {
        out += "  " + quoted(key) + ": " + value;
        out += ++index < fields.size() ? ",\n" : "\n";
    }
    return out + "}\n";
}

Certificate parse_certificate(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& err) {
        throw ParseError(std::string("parse error: ") + err.what());
    }
    if (!doc.is_object()) throw ParseError("parse error: certificate must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (!certificate_keys().contains(key)) throw ParseError("parse error: unexpected key '" + key + "'");
    }
    for (const auto& key : certificate_keys()) {
        if (!doc.contains(key)) throw ParseError("parse error: missing key '" + key + "'");
    }

    Certificate cert;
    if (!doc.at("schema_version").is_string()) throw ParseError("parse error: schema_version must be a string");
    cert.schema_version = doc.at("schema_version").get<std::string>();
    if (cert.schema_version != kCertificateSchemaVersion) {
        throw ParseError("parse error: unsupported schema_version '" + cert.schema_version + "'");
    }
    try {
        cert.m = read_integer(doc, "m");
        cert.n = read_integer(doc, "n");
        cert.r = read_integer(doc, "r");
        cert.d = read_integer(doc, "d");
        cert.e = read_integer(doc, "e");
        cert.alpha = read_integer(doc, "alpha");
        cert.lambda_u = read_integer_list(doc, "lambda_u");
        cert.lambda_v = read_integer_list(doc, "lambda_v");
        cert.a0 = read_rational(doc, "a0");
        cert.a1 = read_rational(doc, "a1");
        cert.b0 = read_rational(doc, "b0");
        cert.b1 = read_rational(doc, "b1");
        cert.df = read_rational(doc, "df");
    } catch (const ParseError& err) {
        throw ParseError(std::string("parse error: ") + err.what());
    }
    if (!doc.at("factor_swapped").is_boolean()) throw ParseError("parse error: factor_swapped must be a boolean");
    cert.factor_swapped = doc.at("factor_swapped").get<bool>();
    return cert;
}

Verdict verify(const Certificate& cert) {
    FailureLog log;
    if (cert.schema_version != kCertificateSchemaVersion) {
        log.fail("schema_version", std::string(kCertificateSchemaVersion), cert.schema_version);
        return log.take();
    }
    if (cert.m < 1 || cert.n < 1) {
        log.fail("shape", "m >= 1 and n >= 1", "m = " + std::to_string(cert.m) + ", n = " + std::to_string(cert.n));
        return log.take();
    }
    if (cert.d < 1 || cert.e < 1) {
        log.fail("polarization", "d >= 1 and e >= 1",
                 "d = " + std::to_string(cert.d) + ", e = " + std::to_string(cert.e));
        return log.take();
    }
    if (cert.lambda_u.size() != static_cast<std::size_t>(cert.m) + 1 ||
        cert.lambda_v.size() != static_cast<std::size_t>(cert.n) + 1) {
        log.fail("lambda_length", std::to_string(cert.m + 1) + "+" + std::to_string(cert.n + 1) + " weights",
                 std::to_string(cert.lambda_u.size()) + "+" + std::to_string(cert.lambda_v.size()));
        return log.take();
    }
    const long min_dim = std::min(cert.m, cert.n);
    if (cert.r < 1 || cert.r > min_dim) {
        log.fail("rank", "1 <= r <= " + std::to_string(min_dim), "r = " + std::to_string(cert.r));
        return log.take();
    }
    if (cert.m == cert.n && cert.r == min_dim) {
        log.fail("hypothesis", "m != n or r < min(m, n)",
                 "m = n = " + std::to_string(cert.m) + ", r = " + std::to_string(cert.r));
    }
    log.expect_equal("sl_u", 0L, sum(cert.lambda_u));
    log.expect_equal("sl_v", 0L, sum(cert.lambda_v));

    const AmbientShape shape(static_cast<unsigned>(cert.m), static_cast<unsigned>(cert.n));
    const Polarization pol(static_cast<unsigned>(cert.d), static_cast<unsigned>(cert.e));
    const NormalForm nf(shape, static_cast<unsigned>(cert.r));
    const OneParameterSubgroup lambda(cert.lambda_u, cert.lambda_v);

    long alpha = 0;
    try {
        alpha = semiinvariant_alpha(nf, lambda).alpha;
    } catch (const NotPreserved& err) {
        log.fail("alpha", "equal weights on every term of f", err.what());
        return log.take();
    }
    log.expect_equal("alpha", alpha, cert.alpha);

    // The certificate carries the canonical destabilizer of its own normal form; without
    // this, lowering r can leave a certificate that is valid for a different hypersurface.
    if (instability_hypothesis_holds(nf)) {
        const DestabilizingSubgroup canonical = destabilizer(nf);
        if (canonical.lambda != lambda) {
            log.fail("lambda", "u=" + render_list(canonical.lambda.u()) + " v=" + render_list(canonical.lambda.v()),
                     "u=" + render_list(cert.lambda_u) + " v=" + render_list(cert.lambda_v));
        }
        if (canonical.factor_swapped != cert.factor_swapped) {
            log.fail("factor_swapped", canonical.factor_swapped ? "true" : "false",
                     cert.factor_swapped ? "true" : "false");
        }
    }

    // N_k and w_k straight from the monomials of S_{dk,ek} and S_{dk-1,ek-1}.
    std::vector<Sample> dims;
    std::vector<Sample> weights;
    const unsigned nodes = shape.m + shape.n + 1;
    for (unsigned k = 1; k <= nodes; ++k) {
        const RestrictedCensus piece = restricted_census(shape, pol.d, pol.e, k, lambda, alpha);
        if (piece.method == CensusMethod::ClosedForm) {
            log.note("k = " + std::to_string(k) + ": piece exceeds the enumeration cap, closed form used");
        }
        dims.push_back({static_cast<long>(k), Rational(piece.dimension)});
        weights.push_back({static_cast<long>(k), Rational(piece.total_weight)});
    }
    const Polynomial hilbert = interpolate(dims);
    const Polynomial weight = interpolate(weights);

    ExpansionCoefficients coeffs;
    try {
        coeffs = expansion_from_polynomials(shape, hilbert, weight);
    } catch (const DegreeMismatch& err) {
        log.fail("degree", "deg N = m+n-1 and deg w = m+n", err.what());
        return log.take();
    }
    log.expect_equal("a0", coeffs.a0, cert.a0);
    log.expect_equal("a1", coeffs.a1, cert.a1);
    log.expect_equal("b0", coeffs.b0, cert.b0);
    log.expect_equal("b1", coeffs.b1, cert.b1);

    const Rational derived = df_general(coeffs).value;
    log.expect_equal("df", derived, cert.df);
    if (cert.df.sign() >= 0) log.fail("df_negative", "df < 0", cert.df.to_string());
    log.expect_equal("df_closed", df_closed(shape, pol, alpha).value, derived);
    return log.take();
}

Verdict verify(std::string_view text) { return verify(parse_certificate(text)); }

}  // namespace kstab
