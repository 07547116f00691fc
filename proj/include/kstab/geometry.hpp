#pragma once

#include <vector>

#include "kstab/bigraded.hpp"
#include "kstab/rational.hpp"

namespace kstab {

/// f = sum c_ij x_i y_j, a bidegree-(1,1) form on P^m x P^n.
/// Rows index x_0..x_m, columns index y_0..y_n.
class BilinearForm {
public:
    /// Throws LengthMismatch if the rows are ragged or fewer than 2 rows/columns are given.
    explicit BilinearForm(std::vector<std::vector<Rational>> rows);

    const AmbientShape& shape() const { return shape_; }
    const std::vector<std::vector<Rational>>& rows() const { return rows_; }
    bool is_zero() const;

private:
    AmbientShape shape_;
    std::vector<std::vector<Rational>> rows_;
};

/// After a linear change of coordinates f = x_0 y_0 + ... + x_r y_r.
struct NormalForm {
    AmbientShape shape;
    unsigned r;

    /// Throws Error unless r <= min(m, n).
    NormalForm(AmbientShape shape_, unsigned r_);

    unsigned min_dim() const { return shape.m < shape.n ? shape.m : shape.n; }
    friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

struct SemiInvariantWeight {
    long alpha;
    friend bool operator==(const SemiInvariantWeight&, const SemiInvariantWeight&) = default;
};

/// Rank of a rational matrix by fraction-free (Bareiss) elimination.
std::size_t exact_rank(const std::vector<std::vector<Rational>>& rows);

/// r = rank - 1. Throws NotAHypersurface on the zero form.
NormalForm normalize(const BilinearForm& form);

bool is_smooth(const NormalForm& nf);
bool is_normal(const NormalForm& nf);

/// Jacobian check done directly on the normal form: look for a point of X where
/// every partial derivative of f vanishes. The singular locus is a product of
/// coordinate subspaces, so it is nonempty iff it contains a pair of coordinate
/// points; those are tested one by one. True iff no singular point exists.
bool singular_locus_empty(const NormalForm& nf);

/// True when m != n or X is singular: the situation in which the destabilizing
/// subgroup below exists.
bool instability_hypothesis_holds(const NormalForm& nf);

struct DestabilizingSubgroup {
    OneParameterSubgroup lambda;
    /// True when the nontrivial weights sit on the first factor P^m.
    bool factor_swapped;
};

/// Weights (-1 x (r+1), r+1, 0, ...) on a factor P^N with r < N, zero on the other.
/// The second factor is used whenever r < n, otherwise the first.
/// Throws NotNormal for r = 0 and MethodInapplicable for m = n = r.
DestabilizingSubgroup destabilizer(const NormalForm& nf);

/// Common dual weight of the terms x_i y_i (i <= r) of the normal form under lambda.
/// Throws NotPreserved if the terms have different weights, LengthMismatch on bad sizes.
SemiInvariantWeight semiinvariant_alpha(const NormalForm& nf, const OneParameterSubgroup& lambda);

}  // namespace kstab
