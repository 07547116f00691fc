#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kstab/rational.hpp"

namespace kstab {

/// P^m x P^n with m, n >= 1.
struct AmbientShape {
    unsigned m;
    unsigned n;

    AmbientShape(unsigned m_, unsigned n_);

    unsigned x_count() const { return m + 1; }
    unsigned y_count() const { return n + 1; }
    friend bool operator==(const AmbientShape&, const AmbientShape&) = default;
};

/// Bidegree (a, b) of the graded piece S_{a,b} = H^0(O(a, b)).
struct BiDegree {
    unsigned a;
    unsigned b;
};

/// Diagonal one-parameter subgroup: t acts by x_i -> t^{u_i} x_i, y_j -> t^{v_j} y_j.
///
/// Arbitrary integer weights are representable; is_special_linear() tells whether
/// the subgroup actually lands in SL(m+1) x SL(n+1).
class OneParameterSubgroup {
public:
    OneParameterSubgroup(std::vector<long> u, std::vector<long> v);
    static OneParameterSubgroup trivial(const AmbientShape& shape);

    const std::vector<long>& u() const { return u_; }
    const std::vector<long>& v() const { return v_; }

    long sum_u() const;
    long sum_v() const;
    bool is_special_linear() const { return sum_u() == 0 && sum_v() == 0; }
    /// "sum(u) = 2" style description of the first violated SL condition, if any.
    std::optional<std::string> special_linear_violation() const;

    bool fits(const AmbientShape& shape) const {
        return u_.size() == shape.x_count() && v_.size() == shape.y_count();
    }
    /// Throws LengthMismatch unless fits(shape).
    void require_fits(const AmbientShape& shape) const;

    /// Componentwise sum of weights (composition of commuting subgroups).
    friend OneParameterSubgroup operator+(const OneParameterSubgroup& lhs, const OneParameterSubgroup& rhs);
    friend bool operator==(const OneParameterSubgroup&, const OneParameterSubgroup&) = default;

private:
    std::vector<long> u_;
    std::vector<long> v_;
};

/// Monomial x^A y^B.
struct Monomial {
    std::vector<unsigned> x_exponents;
    std::vector<unsigned> y_exponents;

    BiDegree bidegree() const;
    friend Monomial operator*(const Monomial& lhs, const Monomial& rhs);
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// dim S_{a,b} = C(m+a, m) * C(n+b, n).
BigInt dim_bigraded(const AmbientShape& shape, BiDegree deg);

/// Calls visit(exponents) for every exponent vector of the given length and total
/// degree, in descending lexicographic order (x_0^deg first).
void for_each_exponent(unsigned variables, unsigned degree, const std::function<void(std::span<const unsigned>)>& visit);

/// Every monomial of S_{a,b}, ordered lexicographically (descending) on (A, B).
std::vector<Monomial> enumerate_monomials(const AmbientShape& shape, BiDegree deg);

/// Weight of a monomial as a section under the dual action: -(A.u + B.v).
long dual_weight(const Monomial& mono, const OneParameterSubgroup& lambda);

/// Maximum number of monomials enumerated in one pass. Read once from the
/// KSTAB_ENUMERATION_CAP environment variable; defaults to 2'000'000.
std::uint64_t enumeration_cap();

/// How a Census was obtained.
enum class CensusMethod {
    Full,        ///< visited every monomial of S_{a,b}
    Factorized,  ///< enumerated each projective factor and combined the per-factor sums
    ClosedForm,  ///< a factor exceeded the cap; binomial closed forms were used
};

std::string to_string(CensusMethod method);

/// Dimension and total dual weight of one graded piece.
struct Census {
    BigInt dimension;
    BigInt total_weight;
    CensusMethod method;
};

/// Counts the monomials of S_{a,b} and sums their dual weights.
///
/// Visits every monomial when dim S_{a,b} <= cap. Above the cap the piece is
/// treated as S_a (x) S_b: each factor is enumerated on its own and
/// total = dim S_b * sum_A w(A) + dim S_a * sum_B w(B). If even a single factor
/// exceeds the cap, the closed forms are used and method == ClosedForm.
Census census(const AmbientShape& shape, BiDegree deg, const OneParameterSubgroup& lambda,
              std::uint64_t cap = enumeration_cap());

/// Sum of dual weights over all monomials of S_{a,b} (via census). Zero for SL subgroups.
BigInt total_weight(const AmbientShape& shape, BiDegree deg, const OneParameterSubgroup& lambda);

/// N_k = dim S_{dk,ek} - dim S_{dk-1,ek-1}, from the exact sequence
/// 0 -> S_{dk-1,ek-1} --f--> S_{dk,ek} -> R_k -> 0.
BigInt restricted_dim(const AmbientShape& shape, unsigned d, unsigned e, unsigned k);

/// Dimension and total weight of R_k measured by census.
struct RestrictedCensus {
    BigInt dimension;
    BigInt total_weight;
    CensusMethod method;  ///< the weakest method used for either piece
};

/// R_k by the equivariant exact sequence: f * S_{dk-1,ek-1} is S_{dk-1,ek-1}
/// shifted by the character of weight alpha, so
/// w(R_k) = w(S_{dk,ek}) - w(S_{dk-1,ek-1}) - alpha * dim S_{dk-1,ek-1}.
RestrictedCensus restricted_census(const AmbientShape& shape, unsigned d, unsigned e, unsigned k,
                                   const OneParameterSubgroup& lambda, long alpha,
                                   std::uint64_t cap = enumeration_cap());

/// Total weight of R_k (the weight component of restricted_census).
BigInt restricted_weight(const AmbientShape& shape, unsigned d, unsigned e, unsigned k,
                         const OneParameterSubgroup& lambda, long alpha);

}  // namespace kstab
