#include "cycov/equations.hpp"

#include <algorithm>
#include <set>

#include "cycov/errors.hpp"

namespace cycov {

namespace {

Polynomial linear_at_root(const BigRational& root) {
    return Polynomial({-root, BigRational(1)});
}

Polynomial power_monomial(int d) { return Polynomial::monomial(BigRational(1), d); }

void require_positions(std::size_t count, std::size_t i, std::size_t j) {
    if (i >= count || j >= count)
        fail(errc::index_out_of_range, "branch position out of range");
    if (i == j)
        fail(errc::equal_positions, "the two branch positions must differ");
}

} // namespace

FactoredForm::FactoredForm(BigRational scalar, std::vector<std::pair<Polynomial, int>> factors)
    : scalar_(std::move(scalar)), factors_(std::move(factors)) {
    if (scalar_.is_zero())
        fail(errc::invalid_argument, "factored form scalar must be nonzero");
    for (const auto& [poly, exp] : factors_) {
        if (poly.degree() < 1)
            fail(errc::constant_factor, "factors must be nonconstant");
        if (exp < 1)
            fail(errc::invalid_argument, "factor exponents must be positive");
    }
    for (std::size_t a = 0; a < factors_.size(); ++a)
        for (std::size_t b = a + 1; b < factors_.size(); ++b)
            if (factors_[a].first == factors_[b].first)
                fail(errc::invalid_argument, "factors must be pairwise distinct");
}

FactoredForm FactoredForm::from_roots(BigRational scalar,
                                      const std::vector<std::pair<BigRational, int>>& roots) {
    std::vector<std::pair<Polynomial, int>> factors;
    factors.reserve(roots.size());
    for (const auto& [root, exp] : roots)
        factors.emplace_back(linear_at_root(root), exp);
    return FactoredForm(std::move(scalar), std::move(factors));
}

int FactoredForm::total_degree() const noexcept {
    int total = 0;
    for (const auto& [poly, exp] : factors_)
        total += exp * poly.degree();
    return total;
}

Polynomial FactoredForm::expanded() const {
    Polynomial result = Polynomial::constant(scalar_);
    for (const auto& [poly, exp] : factors_)
        result = result * pow(poly, exp);
    return result;
}

EquationSystem::EquationSystem(PrimeDegree d, std::string indeterminate,
                               std::vector<Relation> relations)
    : d_(d), indeterminate_(std::move(indeterminate)), relations_(std::move(relations)) {
    if (indeterminate_.empty())
        fail(errc::invalid_argument, "indeterminate name must be nonempty");
    if (relations_.empty())
        fail(errc::invalid_argument, "equation system needs at least one relation");
    std::set<std::string> seen;
    for (const auto& relation : relations_) {
        if (relation.variable.empty())
            fail(errc::invalid_argument, "relation variable name must be nonempty");
        if (relation.variable == indeterminate_)
            fail(errc::invalid_argument, "relation variable clashes with the indeterminate");
        if (!seen.insert(relation.variable).second)
            fail(errc::invalid_argument, "relation variables must be distinct");
        if (relation.rhs.total_degree() % d_.value() != 0)
            fail(errc::ramified_at_infinity,
                 "total degree of " + relation.variable + "-relation is not divisible by " +
                     std::to_string(d_.value()));
    }
}

EquationSystem base_equation(const CyclicCurve& curve) {
    std::vector<std::pair<BigRational, int>> roots;
    roots.reserve(curve.branch_points().size());
    for (std::size_t k = 0; k < curve.branch_points().size(); ++k)
        roots.emplace_back(curve.branch_points()[k], curve.alpha()[k]);
    std::vector<Relation> relations;
    relations.push_back({"y", FactoredForm::from_roots(BigRational(1), roots)});
    return EquationSystem(curve.degree(), "x", std::move(relations));
}

EquationSystem cover_equations(const CoverSpec& cover) {
    const CyclicCurve& curve = cover.base();
    std::vector<std::pair<BigRational, int>> cover_roots;
    for (std::size_t k = 0; k < curve.branch_points().size(); ++k)
        if (cover.beta()[k] != 0)
            cover_roots.emplace_back(curve.branch_points()[k], cover.beta()[k]);
    EquationSystem base = base_equation(curve);
    std::vector<Relation> relations = base.relations();
    relations.push_back({"z", FactoredForm::from_roots(BigRational(1), cover_roots)});
    return EquationSystem(curve.degree(), "x", std::move(relations));
}

CoordinateChange coordinate_change(const ExponentVector& alpha, const ExponentVector& beta1,
                                   const ExponentVector& beta2) {
    const int d = alpha.modulus().value();
    if (beta1.modulus() != alpha.modulus() || beta2.modulus() != alpha.modulus())
        fail(errc::modulus_mismatch, "vectors have different moduli");
    if (beta1.size() != alpha.size() || beta2.size() != alpha.size())
        fail(errc::length_mismatch, "vectors have different lengths");
    if (alpha.is_zero())
        fail(errc::zero_vector, "alpha must be nonzero");
    if (degree_sum_residue(alpha) != 0 || degree_sum_residue(beta1) != 0 ||
        degree_sum_residue(beta2) != 0)
        fail(errc::not_degree_zero, "all vectors must have entry sum zero");
    if (span_membership(beta1, alpha) || span_membership(beta2, alpha))
        fail(errc::trivial_cover, "cover vectors may not be multiples of alpha");

    for (int j = 0; j < d; ++j) {
        if (linear_combine(j, alpha, -1, beta1) != beta2)
            continue;
        std::vector<int> extraction(alpha.size(), 0);
        for (std::size_t k = 0; k < alpha.size(); ++k) {
            const int numerator = j * alpha[k] - beta1[k] - beta2[k];
            if (numerator % d != 0)
                fail(errc::internal_inconsistency, "extraction exponent not integral");
            extraction[k] = numerator / d;
        }
        return CoordinateChange{j, std::move(extraction), d};
    }
    for (int m = 0; m < d; ++m)
        if (linear_combine(1, beta1, m, alpha) == beta2)
            fail(errc::orientation_mismatch,
                 "covers are isomorphic but no y^j/z change of coordinates exists");
    fail(errc::not_isomorphic, "covers are not isomorphic");
}

TwoPointTransform two_point_transform(const CyclicCurve& curve, std::size_t i, std::size_t j) {
    require_positions(curve.branch_points().size(), i, j);
    const auto& points = curve.branch_points();
    TwoPointTransform transform;
    transform.i = i;
    transform.j = j;
    transform.pivot_difference = points[i] - points[j];
    for (std::size_t k = 0; k < curve.branch_points().size(); ++k) {
        transform.exponent_sum += curve.alpha()[k];
        if (k == i || k == j)
            continue;
        transform.c_values.emplace_back(k, (points[k] - points[i]) / (points[k] - points[j]));
        transform.new_exponents.push_back(curve.alpha()[k]);
        transform.scale_factors.emplace_back(points[k] - points[j], curve.alpha()[k]);
    }
    return transform;
}

RationalFunction transform_x_map(const CyclicCurve& curve, const TwoPointTransform& transform) {
    require_positions(curve.branch_points().size(), transform.i, transform.j);
    const Polynomial td = power_monomial(curve.degree().value());
    const Polynomial numerator =
        Polynomial::constant(curve.branch_points()[transform.i]) -
        Polynomial::constant(curve.branch_points()[transform.j]) * td;
    const Polynomial denominator = Polynomial::constant(BigRational(1)) - td;
    return RationalFunction(numerator, denominator);
}

bool verify_two_point_identity(const CyclicCurve& curve, const TwoPointTransform& transform) {
    require_positions(curve.branch_points().size(), transform.i, transform.j);
    const std::size_t expected = curve.branch_points().size() - 2;
    if (transform.c_values.size() != expected || transform.new_exponents.size() != expected ||
        transform.scale_factors.size() != expected)
        fail(errc::length_mismatch, "transform data does not match the curve");

    const int d = curve.degree().value();
    const Polynomial td = power_monomial(d);
    const RationalFunction x_of_t = transform_x_map(curve, transform);

    RationalFunction lhs(Polynomial::constant(BigRational(1)));
    for (std::size_t k = 0; k < curve.branch_points().size(); ++k) {
        const RationalFunction shifted = compose(linear_at_root(curve.branch_points()[k]), x_of_t);
        lhs = lhs * pow(shifted, curve.alpha()[k]);
    }
    const Polynomial one_minus_td = Polynomial::constant(BigRational(1)) - td;
    lhs = lhs * pow(RationalFunction(one_minus_td), transform.exponent_sum);
    if (!lhs.is_polynomial())
        return false;

    const int alpha_i = curve.alpha()[transform.i];
    const int alpha_j = curve.alpha()[transform.j];
    BigRational scalar = transform.pivot_difference.pow(alpha_i + alpha_j);
    for (const auto& [difference, exp] : transform.scale_factors)
        scalar *= difference.pow(exp);
    Polynomial rhs = Polynomial::monomial(scalar, d * alpha_i);
    for (std::size_t idx = 0; idx < transform.c_values.size(); ++idx) {
        const Polynomial factor = td - Polynomial::constant(transform.c_values[idx].second);
        rhs = rhs * pow(factor, transform.new_exponents[idx]);
    }
    return lhs.numerator() == rhs;
}

EquationSystem transformed_equation(const CyclicCurve& curve,
                                    const TwoPointTransform& transform) {
    require_positions(curve.branch_points().size(), transform.i, transform.j);
    const Polynomial td = power_monomial(curve.degree().value());
    std::vector<std::pair<Polynomial, int>> factors;
    factors.reserve(transform.c_values.size());
    for (std::size_t idx = 0; idx < transform.c_values.size(); ++idx)
        factors.emplace_back(td - Polynomial::constant(transform.c_values[idx].second),
                             transform.new_exponents[idx]);
    std::vector<Relation> relations;
    relations.push_back({"w", FactoredForm(BigRational(1), std::move(factors))});
    return EquationSystem(curve.degree(), "t", std::move(relations));
}

ExponentVector transformed_exponent_datum(const CyclicCurve& curve,
                                          const TwoPointTransform& transform) {
    require_positions(curve.branch_points().size(), transform.i, transform.j);
    const int d = curve.degree().value();
    std::vector<int> entries;
    entries.reserve(transform.new_exponents.size() * static_cast<std::size_t>(d));
    for (const int exp : transform.new_exponents)
        entries.insert(entries.end(), static_cast<std::size_t>(d), exp);
    return ExponentVector(curve.degree(), std::move(entries));
}

ExponentVector two_point_cover_vector(const CyclicCurve& curve, std::size_t i, std::size_t j) {
    require_positions(curve.branch_points().size(), i, j);
    std::vector<int> entries(curve.branch_count(), 0);
    entries[i] = 1;
    entries[j] = curve.degree().value() - 1;
    return ExponentVector(curve.degree(), std::move(entries));
}

EquationSystem rational_cover_from_factors(PrimeDegree d, const Polynomial& f1,
                                           const Polynomial& f2) {
    for (const Polynomial* factor : {&f1, &f2})
        if (factor->degree() < 1)
            fail(errc::constant_factor, "both factors must be nonconstant");
    for (const Polynomial* factor : {&f1, &f2})
        if (factor->degree() % d.value() != 0)
            fail(errc::degree_not_divisible,
                 "factor degrees must be divisible by " + std::to_string(d.value()));
    if (!is_squarefree(f1 * f2))
        fail(errc::not_squarefree, "the product of the factors must be squarefree");

    std::vector<Relation> relations;
    relations.push_back({"y", FactoredForm(BigRational(1), {{f1, 1}, {f2, 1}})});
    relations.push_back({"z", FactoredForm(BigRational(1), {{f1, 1}})});
    return EquationSystem(d, "x", std::move(relations));
}

} // namespace cycov
