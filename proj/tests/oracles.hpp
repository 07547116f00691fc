#pragma once

// Test-only reference computations. Nothing here calls into the code paths it
// is used to check: binomials come from Pascal's rule, monomials from an
// odometer over [0, degree]^vars, ranks from plain rational Gauss-Jordan.

#include <cstdint>
#include <random>
#include <vector>

#include "kstab/bigraded.hpp"
#include "kstab/rational.hpp"

namespace oracle {

using kstab::BigInt;
using kstab::Rational;

/// Pascal triangle rows 0..size-1.
inline std::vector<std::vector<BigInt>> pascal(unsigned size) {
    std::vector<std::vector<BigInt>> rows(size);
    for (unsigned a = 0; a < size; ++a) {
        rows[a].assign(a + 1, BigInt(1));
        for (unsigned b = 1; b < a; ++b) rows[a][b] = rows[a - 1][b - 1] + rows[a - 1][b];
    }
    return rows;
}

/// C(a, b) from Pascal's rule, 0 when b > a or a < 0.
inline BigInt pascal_binom(long a, long b) {
    if (a < 0 || b < 0 || b > a) return 0;
    return pascal(static_cast<unsigned>(a) + 1)[a][b];
}

/// Every exponent vector with `vars` entries summing to `degree`, by scanning
/// the whole box [0, degree]^vars.
inline std::vector<std::vector<unsigned>> box_scan(unsigned vars, unsigned degree) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> digits(vars, 0);
    while (true) {
        unsigned total = 0;
        for (unsigned x : digits) total += x;
        if (total == degree) out.push_back(digits);
        unsigned pos = 0;
        while (pos < vars && digits[pos] == degree) digits[pos++] = 0;
        if (pos == vars) break;
        ++digits[pos];
    }
    return out;
}

/// Number of monomials of bidegree (a, b) by box scanning both factors.
inline std::uint64_t count_monomials(unsigned m, unsigned n, unsigned a, unsigned b) {
    return box_scan(m + 1, a).size() * box_scan(n + 1, b).size();
}

/// Sum of -(A.u + B.v) over box-scanned monomials of bidegree (a, b).
inline long weight_sum(const std::vector<long>& u, const std::vector<long>& v, unsigned a, unsigned b) {
    auto xs = box_scan(static_cast<unsigned>(u.size()), a);
    auto ys = box_scan(static_cast<unsigned>(v.size()), b);
    long total = 0;
    for (const auto& x : xs) {
        for (const auto& y : ys) {
            long w = 0;
            for (std::size_t i = 0; i < x.size(); ++i) w += static_cast<long>(x[i]) * u[i];
            for (std::size_t j = 0; j < y.size(); ++j) w += static_cast<long>(y[j]) * v[j];
            total -= w;
        }
    }
    return total;
}

/// Rank by Gauss-Jordan over the rationals.
inline std::size_t gauss_rank(std::vector<std::vector<Rational>> a) {
    std::size_t rank = 0;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || a[i][c].is_zero()) continue;
            Rational factor = a[i][c] / a[rank][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= factor * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

/// Random integer vector of given length with entries in [lo, hi] summing to zero.
inline std::vector<long> random_sl_weights(std::mt19937& rng, std::size_t length, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    while (true) {
        std::vector<long> w(length);
        long sum = 0;
        for (std::size_t i = 0; i + 1 < length; ++i) {
            w[i] = dist(rng);
            sum += w[i];
        }
        w.back() = -sum;
        if (w.back() >= lo && w.back() <= hi) return w;
    }
}

}  // namespace oracle
