#include "kstab/bigraded.hpp"

#include <charconv>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string_view>

#include "kstab/error.hpp"
#include "kstab/polynomial.hpp"

namespace kstab {

namespace {

__extension__ typedef __int128 Wide;
__extension__ typedef unsigned __int128 UWide;

constexpr std::uint64_t kDefaultEnumerationCap = 2'000'000;

long checked_long(Wide value) {
    if (value > std::numeric_limits<long>::max() || value < std::numeric_limits<long>::min()) {
        throw Error("weight overflows a 64-bit integer");
    }
    return static_cast<long>(value);
}

BigInt to_bigint(Wide value) {
    bool negative = value < 0;
    UWide magnitude = negative ? -static_cast<UWide>(value) : value;
    BigInt high = static_cast<unsigned long>(magnitude >> 64);
    BigInt low = static_cast<unsigned long>(magnitude & 0xFFFF'FFFF'FFFF'FFFFULL);
    BigInt out = (high << 64) + low;
    return negative ? BigInt(-out) : out;
}

// Weight of every exponent vector of one factor, -(exponents . weights), in enumeration order.
std::vector<Wide> factor_weights(std::span<const long> weights, unsigned degree) {
    std::vector<Wide> out;
    for_each_exponent(static_cast<unsigned>(weights.size()), degree, [&](std::span<const unsigned> exps) {
        Wide w = 0;
        for (std::size_t i = 0; i < exps.size(); ++i) w -= static_cast<Wide>(exps[i]) * weights[i];
        out.push_back(w);
    });
    return out;
}

}  // namespace

AmbientShape::AmbientShape(unsigned m_, unsigned n_) : m(m_), n(n_) {
    if (m == 0 || n == 0) throw Error("ambient shape needs m >= 1 and n >= 1");
}

OneParameterSubgroup::OneParameterSubgroup(std::vector<long> u, std::vector<long> v)
    : u_(std::move(u)), v_(std::move(v)) {}

OneParameterSubgroup OneParameterSubgroup::trivial(const AmbientShape& shape) {
    return {std::vector<long>(shape.x_count(), 0), std::vector<long>(shape.y_count(), 0)};
}

long OneParameterSubgroup::sum_u() const { return std::accumulate(u_.begin(), u_.end(), 0L); }
long OneParameterSubgroup::sum_v() const { return std::accumulate(v_.begin(), v_.end(), 0L); }

std::optional<std::string> OneParameterSubgroup::special_linear_violation() const {
    if (sum_u() != 0) return "sum(u) = " + std::to_string(sum_u());
    if (sum_v() != 0) return "sum(v) = " + std::to_string(sum_v());
    return std::nullopt;
}

void OneParameterSubgroup::require_fits(const AmbientShape& shape) const {
    if (!fits(shape)) {
        throw LengthMismatch("one-parameter subgroup has " + std::to_string(u_.size()) + "+" +
                             std::to_string(v_.size()) + " weights, expected " + std::to_string(shape.x_count()) +
                             "+" + std::to_string(shape.y_count()));
    }
}

OneParameterSubgroup operator+(const OneParameterSubgroup& lhs, const OneParameterSubgroup& rhs) {
    if (lhs.u_.size() != rhs.u_.size() || lhs.v_.size() != rhs.v_.size()) {
        throw LengthMismatch("cannot add one-parameter subgroups of different shapes");
    }
    auto u = lhs.u_;
    auto v = lhs.v_;
    for (std::size_t i = 0; i < u.size(); ++i) u[i] += rhs.u_[i];
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += rhs.v_[j];
    return {std::move(u), std::move(v)};
}

BiDegree Monomial::bidegree() const {
    return {std::accumulate(x_exponents.begin(), x_exponents.end(), 0U),
            std::accumulate(y_exponents.begin(), y_exponents.end(), 0U)};
}

Monomial operator*(const Monomial& lhs, const Monomial& rhs) {
    if (lhs.x_exponents.size() != rhs.x_exponents.size() || lhs.y_exponents.size() != rhs.y_exponents.size()) {
        throw LengthMismatch("cannot multiply monomials in different rings");
    }
    Monomial out = lhs;
    for (std::size_t i = 0; i < out.x_exponents.size(); ++i) out.x_exponents[i] += rhs.x_exponents[i];
    for (std::size_t j = 0; j < out.y_exponents.size(); ++j) out.y_exponents[j] += rhs.y_exponents[j];
    return out;
}

BigInt dim_bigraded(const AmbientShape& shape, BiDegree deg) {
    return binom(shape.m + deg.a, shape.m) * binom(shape.n + deg.b, shape.n);
}

void for_each_exponent(unsigned variables, unsigned degree,
                       const std::function<void(std::span<const unsigned>)>& visit) {
    if (variables == 0) {
        if (degree == 0) visit({});
        return;
    }
    std::vector<unsigned> exps(variables, 0);
    exps[0] = degree;
    while (true) {
        visit(exps);
        // Step to the lexicographically next-smaller composition: find the last
        // nonzero entry before the tail, move one unit right, and gather the tail.
        const unsigned last = variables - 1;
        unsigned tail = exps[last];
        exps[last] = 0;
        int pivot = static_cast<int>(last) - 1;
        while (pivot >= 0 && exps[pivot] == 0) --pivot;
        if (pivot < 0) return;
        exps[pivot] -= 1;
        exps[pivot + 1] = tail + 1;
    }
}

std::vector<Monomial> enumerate_monomials(const AmbientShape& shape, BiDegree deg) {
    std::vector<std::vector<unsigned>> xs;
    std::vector<std::vector<unsigned>> ys;
    for_each_exponent(shape.x_count(), deg.a, [&](std::span<const unsigned> e) { xs.emplace_back(e.begin(), e.end()); });
    for_each_exponent(shape.y_count(), deg.b, [&](std::span<const unsigned> e) { ys.emplace_back(e.begin(), e.end()); });
    std::vector<Monomial> out;
    out.reserve(xs.size() * ys.size());
    for (const auto& x : xs) {
        for (const auto& y : ys) out.push_back({x, y});
    }
    return out;
}

long dual_weight(const Monomial& mono, const OneParameterSubgroup& lambda) {
    if (mono.x_exponents.size() != lambda.u().size() || mono.y_exponents.size() != lambda.v().size()) {
        throw LengthMismatch("monomial and one-parameter subgroup have different variable counts");
    }
    Wide w = 0;
    for (std::size_t i = 0; i < mono.x_exponents.size(); ++i) w += static_cast<Wide>(mono.x_exponents[i]) * lambda.u()[i];
    for (std::size_t j = 0; j < mono.y_exponents.size(); ++j) w += static_cast<Wide>(mono.y_exponents[j]) * lambda.v()[j];
    return checked_long(-w);
}

std::uint64_t enumeration_cap() {
    static const std::uint64_t cap = [] {
        const char* raw = std::getenv("KSTAB_ENUMERATION_CAP");
        if (raw == nullptr) return kDefaultEnumerationCap;
        std::string_view text(raw);
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc() || ptr != text.data() + text.size()) return kDefaultEnumerationCap;
        return value;
    }();
    return cap;
}

std::string to_string(CensusMethod method) {
    switch (method) {
        case CensusMethod::Full: return "full enumeration";
        case CensusMethod::Factorized: return "factorized enumeration";
        case CensusMethod::ClosedForm: return "closed form";
    }
    return "unknown";
}

Census census(const AmbientShape& shape, BiDegree deg, const OneParameterSubgroup& lambda, std::uint64_t cap) {
    lambda.require_fits(shape);
    const BigInt dim_x = binom(shape.m + deg.a, shape.m);
    const BigInt dim_y = binom(shape.n + deg.b, shape.n);
    const BigInt capacity(static_cast<unsigned long>(cap));

    if (dim_x > capacity || dim_y > capacity) {
        // Each variable x_i appears with total exponent C(a+m, m+1) across S_a.
        BigInt sum_x = -BigInt(lambda.sum_u()) * binom(deg.a + shape.m, shape.m + 1);
        BigInt sum_y = -BigInt(lambda.sum_v()) * binom(deg.b + shape.n, shape.n + 1);
        return {dim_x * dim_y, dim_y * sum_x + dim_x * sum_y, CensusMethod::ClosedForm};
    }

    const auto wx = factor_weights(lambda.u(), deg.a);
    const auto wy = factor_weights(lambda.v(), deg.b);

    if (dim_x * dim_y <= capacity) {
        std::uint64_t count = 0;
        Wide total = 0;
        for (Wide a : wx) {
            for (Wide b : wy) {
                ++count;
                total += a + b;
            }
        }
        return {BigInt(static_cast<unsigned long>(count)), to_bigint(total), CensusMethod::Full};
    }

    Wide sum_x = std::accumulate(wx.begin(), wx.end(), static_cast<Wide>(0));
    Wide sum_y = std::accumulate(wy.begin(), wy.end(), static_cast<Wide>(0));
    BigInt count_x = static_cast<unsigned long>(wx.size());
    BigInt count_y = static_cast<unsigned long>(wy.size());
    return {count_x * count_y, count_y * to_bigint(sum_x) + count_x * to_bigint(sum_y), CensusMethod::Factorized};
}

BigInt total_weight(const AmbientShape& shape, BiDegree deg, const OneParameterSubgroup& lambda) {
    return census(shape, deg, lambda).total_weight;
}

BigInt restricted_dim(const AmbientShape& shape, unsigned d, unsigned e, unsigned k) {
    if (k == 0) throw Error("restricted_dim needs k >= 1");
    return dim_bigraded(shape, {d * k, e * k}) - dim_bigraded(shape, {d * k - 1, e * k - 1});
}

RestrictedCensus restricted_census(const AmbientShape& shape, unsigned d, unsigned e, unsigned k,
                                   const OneParameterSubgroup& lambda, long alpha, std::uint64_t cap) {
    if (k == 0 || d == 0 || e == 0) throw Error("restricted_census needs d, e, k >= 1");
    const Census top = census(shape, {d * k, e * k}, lambda, cap);
    const Census sub = census(shape, {d * k - 1, e * k - 1}, lambda, cap);
    return {top.dimension - sub.dimension, top.total_weight - sub.total_weight - BigInt(alpha) * sub.dimension,
            std::max(top.method, sub.method)};
}

BigInt restricted_weight(const AmbientShape& shape, unsigned d, unsigned e, unsigned k,
                         const OneParameterSubgroup& lambda, long alpha) {
    return restricted_census(shape, d, e, k, lambda, alpha).total_weight;
}

}  // namespace kstab
