#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cycov/covers.hpp"
#include "cycov/curves.hpp"
#include "cycov/polynomial.hpp"

namespace cycov {

/// scalar * prod factors[k]^exponents[k]. Factors are nonconstant, pairwise
/// distinct polynomials; base and cover equations use monic linear factors
/// (x - root), rational covers keep general coefficient-form factors.
class FactoredForm {
public:
    FactoredForm(BigRational scalar, std::vector<std::pair<Polynomial, int>> factors);

    static FactoredForm from_roots(BigRational scalar,
                                   const std::vector<std::pair<BigRational, int>>& roots);

    const BigRational& scalar() const noexcept { return scalar_; }
    const std::vector<std::pair<Polynomial, int>>& factors() const noexcept { return factors_; }

    /// Sum of exponent * factor degree.
    int total_degree() const noexcept;
    Polynomial expanded() const;

    friend bool operator==(const FactoredForm& a, const FactoredForm& b) {
        return a.scalar_ == b.scalar_ && a.factors_ == b.factors_;
    }
    friend bool operator!=(const FactoredForm& a, const FactoredForm& b) { return !(a == b); }

private:
    BigRational scalar_;
    std::vector<std::pair<Polynomial, int>> factors_;
};

struct Relation {
    std::string variable;
    FactoredForm rhs;

    friend bool operator==(const Relation& a, const Relation& b) {
        return a.variable == b.variable && a.rhs == b.rhs;
    }
};

/// A system of Kummer relations variable^d = form, all sharing the prime d
/// and one indeterminate. Each form's total degree is divisible by d, which
/// is the unramified-over-infinity condition.
class EquationSystem {
public:
    EquationSystem(PrimeDegree d, std::string indeterminate, std::vector<Relation> relations);

    PrimeDegree degree() const noexcept { return d_; }
    const std::string& indeterminate() const noexcept { return indeterminate_; }
    const std::vector<Relation>& relations() const noexcept { return relations_; }

    friend bool operator==(const EquationSystem& a, const EquationSystem& b) {
        return a.d_ == b.d_ && a.indeterminate_ == b.indeterminate_ &&
               a.relations_ == b.relations_;
    }
    friend bool operator!=(const EquationSystem& a, const EquationSystem& b) {
        return !(a == b);
    }

private:
    PrimeDegree d_;
    std::string indeterminate_;
    std::vector<Relation> relations_;
};

/// y^d = prod (x - b_i)^{alpha_i}.
EquationSystem base_equation(const CyclicCurve& curve);

/// y^d = prod (x - b_i)^{alpha_i} and z^d = prod (x - b_i)^{beta_i}, with
/// zero-exponent positions omitted from the second product.
EquationSystem cover_equations(const CoverSpec& cover);

/// The coordinate change z' = zeta_d * y^j / z between isomorphic covers,
/// with the monomial correction prod (x - b_k)^{-extraction_exponents[k]}
/// certified by d * extraction_exponents + beta2 = j * alpha - beta1 over
/// the integers. zeta_d stays symbolic; only its order is recorded.
struct CoordinateChange {
    int j = 0;
    std::vector<int> extraction_exponents;
    int root_of_unity_order = 0;
};

/// Finds j with beta2 = j*alpha - beta1. Covers related only through
/// beta2 = beta1 + m*alpha have no y^j/z form (OrientationMismatch);
/// unrelated vectors give NotIsomorphic.
CoordinateChange coordinate_change(const ExponentVector& alpha, const ExponentVector& beta1,
                                   const ExponentVector& beta2);

/// The substitution z = t*(x - a_j) applied to the cover with additional
/// equation z^d = (x - a_i)(x - a_j)^{d-1}: branch data c_k and the exact
/// constants needed to verify the transformed equation as a d-th power.
struct TwoPointTransform {
    std::size_t i = 0;
    std::size_t j = 0;
    std::vector<std::pair<std::size_t, BigRational>> c_values; // (k, (a_k-a_i)/(a_k-a_j))
    std::vector<int> new_exponents;                            // alpha_k aligned with c_values
    int exponent_sum = 0;                                      // s = sum of all alpha_k
    BigRational pivot_difference;                              // a_i - a_j
    std::vector<std::pair<BigRational, int>> scale_factors;    // (a_k - a_j, alpha_k)
};

TwoPointTransform two_point_transform(const CyclicCurve& curve, std::size_t i, std::size_t j);

/// Exact polynomial identity certifying the transform at the d-th-power
/// level, with s = sum of all alpha_k:
///   prod_k (x(t) - a_k)^{alpha_k} * (1 - t^d)^s
///     = t^{d*alpha_i} * (a_i - a_j)^{alpha_i + alpha_j}
///       * prod_{k != i,j} (a_k - a_j)^{alpha_k} * prod_{k != i,j} (t^d - c_k)^{alpha_k}
/// Both sides are expanded exactly; no radicals are ever extracted.
bool verify_two_point_identity(const CyclicCurve& curve, const TwoPointTransform& transform);

/// w^d = prod (t^d - c_k)^{alpha_k}, the transformed relation.
EquationSystem transformed_equation(const CyclicCurve& curve, const TwoPointTransform& transform);

/// x(t) = (a_i - a_j t^d) / (1 - t^d), the x-component of the forward map.
RationalFunction transform_x_map(const CyclicCurve& curve, const TwoPointTransform& transform);

/// The transformed relation read as cyclic-cover exponent data in t: each
/// c_k contributes d branch values of exponent alpha_k.
ExponentVector transformed_exponent_datum(const CyclicCurve& curve,
                                          const TwoPointTransform& transform);

/// The cover vector with entry 1 at i, d-1 at j, and 0 elsewhere, i.e. the
/// additional equation z^d = (x - a_i)(x - a_j)^{d-1}.
ExponentVector two_point_cover_vector(const CyclicCurve& curve, std::size_t i, std::size_t j);

/// For f1*f2 squarefree with both degrees divisible by d: the system
/// y^d = f1(x)*f2(x), z^d = f1(x), defined over the rationals.
EquationSystem rational_cover_from_factors(PrimeDegree d, const Polynomial& f1,
                                           const Polynomial& f2);

} // namespace cycov
