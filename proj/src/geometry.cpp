#include "kstab/geometry.hpp"

#include <algorithm>
#include <string>

#include "kstab/error.hpp"

namespace kstab {

namespace {

AmbientShape shape_of(const std::vector<std::vector<Rational>>& rows) {
    if (rows.size() < 2 || rows.front().size() < 2) {
        throw LengthMismatch("coefficient matrix must be at least 2x2 (m, n >= 1)");
    }
    for (const auto& row : rows) {
        if (row.size() != rows.front().size()) throw LengthMismatch("coefficient matrix has ragged rows");
    }
    return {static_cast<unsigned>(rows.size() - 1), static_cast<unsigned>(rows.front().size() - 1)};
}

// f = sum_{i<=r} x_i y_i at the coordinate point (e_p, e_q) together with its gradient.
struct PointJet {
    Rational value;
    std::vector<Rational> dx;
    std::vector<Rational> dy;
};

PointJet jet_at_coordinate_point(const NormalForm& nf, unsigned p, unsigned q) {
    std::vector<Rational> x(nf.shape.x_count());
    std::vector<Rational> y(nf.shape.y_count());
    x[p] = 1;
    y[q] = 1;
    PointJet jet{Rational(), std::vector<Rational>(x.size()), std::vector<Rational>(y.size())};
    for (unsigned i = 0; i <= nf.r; ++i) {
        jet.value += x[i] * y[i];
        jet.dx[i] += y[i];
        jet.dy[i] += x[i];
    }
    return jet;
}

}  // namespace

BilinearForm::BilinearForm(std::vector<std::vector<Rational>> rows) : shape_(shape_of(rows)), rows_(std::move(rows)) {}

bool BilinearForm::is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const auto& row) {
        return std::all_of(row.begin(), row.end(), [](const Rational& c) { return c.is_zero(); });
    });
}

NormalForm::NormalForm(AmbientShape shape_, unsigned r_) : shape(shape_), r(r_) {
    if (r > min_dim()) {
        throw Error("normal form rank index r = " + std::to_string(r) + " exceeds min(m, n) = " +
                    std::to_string(min_dim()));
    }
}

std::size_t exact_rank(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return 0;
    const std::size_t row_count = rows.size();
    const std::size_t col_count = rows.front().size();

    // Clear denominators row by row; rank is unchanged.
    std::vector<std::vector<BigInt>> a(row_count, std::vector<BigInt>(col_count));
    for (std::size_t i = 0; i < row_count; ++i) {
        BigInt scale = 1;
        for (const auto& c : rows[i]) scale = lcm(scale, c.denominator());
        for (std::size_t j = 0; j < col_count; ++j) {
            a[i][j] = rows[i][j].numerator() * (scale / rows[i][j].denominator());
        }
    }

    BigInt previous_pivot = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < col_count && rank < row_count; ++col) {
        std::size_t pivot = rank;
        while (pivot < row_count && a[pivot][col] == 0) ++pivot;
        if (pivot == row_count) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t i = rank + 1; i < row_count; ++i) {
            for (std::size_t j = col + 1; j < col_count; ++j) {
                BigInt numerator = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
                mpz_divexact(a[i][j].get_mpz_t(), numerator.get_mpz_t(), previous_pivot.get_mpz_t());
            }
            a[i][col] = 0;
        }
        previous_pivot = a[rank][col];
        ++rank;
    }
    return rank;
}

NormalForm normalize(const BilinearForm& form) {
    std::size_t rank = exact_rank(form.rows());
    if (rank == 0) throw NotAHypersurface("the zero form defines no hypersurface");
    return {form.shape(), static_cast<unsigned>(rank - 1)};
}

bool is_smooth(const NormalForm& nf) { return nf.r == nf.min_dim(); }

bool is_normal(const NormalForm& nf) { return nf.r >= 1; }

bool singular_locus_empty(const NormalForm& nf) {
    auto is_zero = [](const Rational& c) { return c.is_zero(); };
    for (unsigned p = 0; p < nf.shape.x_count(); ++p) {
        for (unsigned q = 0; q < nf.shape.y_count(); ++q) {
            PointJet jet = jet_at_coordinate_point(nf, p, q);
            if (!jet.value.is_zero()) continue;
            if (std::all_of(jet.dx.begin(), jet.dx.end(), is_zero) &&
                std::all_of(jet.dy.begin(), jet.dy.end(), is_zero)) {
                return false;
            }
        }
    }
    return true;
}

bool instability_hypothesis_holds(const NormalForm& nf) { return nf.shape.m != nf.shape.n || !is_smooth(nf); }

DestabilizingSubgroup destabilizer(const NormalForm& nf) {
    if (!is_normal(nf)) throw NotNormal("not normal: r = 0");
    if (!instability_hypothesis_holds(nf)) {
        throw MethodInapplicable("method inapplicable: m = n and X is smooth");
    }
    const bool swapped = nf.r >= nf.shape.n;
    std::vector<long> active(swapped ? nf.shape.x_count() : nf.shape.y_count(), 0);
    for (unsigned i = 0; i <= nf.r; ++i) active[i] = -1;
    active[nf.r + 1] = static_cast<long>(nf.r) + 1;

    std::vector<long> idle(swapped ? nf.shape.y_count() : nf.shape.x_count(), 0);
    if (swapped) return {OneParameterSubgroup(std::move(active), std::move(idle)), true};
    return {OneParameterSubgroup(std::move(idle), std::move(active)), false};
}

SemiInvariantWeight semiinvariant_alpha(const NormalForm& nf, const OneParameterSubgroup& lambda) {
    lambda.require_fits(nf.shape);
    std::optional<long> common;
    for (unsigned i = 0; i <= nf.r; ++i) {
        Monomial term{std::vector<unsigned>(nf.shape.x_count(), 0), std::vector<unsigned>(nf.shape.y_count(), 0)};
        term.x_exponents[i] = 1;
        term.y_exponents[i] = 1;
        long w = dual_weight(term, lambda);
        if (common && *common != w) {
            throw NotPreserved("lambda does not preserve X: term x" + std::to_string(i) + "*y" + std::to_string(i) +
                               " has weight " + std::to_string(w) + ", term x0*y0 has weight " +
                               std::to_string(*common));
        }
        common = w;
    }
    return {*common};
}

}  // namespace kstab
