#include "cycov/covers.hpp"

#include <algorithm>
#include <set>

namespace cycov {

namespace {

long long binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    long long result = 1;
    for (int i = 1; i <= k; ++i)
        result = result * (n - k + i) / i;
    return result;
}

long long ipow(long long base, int exponent) {
    long long result = 1;
    for (int i = 0; i < exponent; ++i)
        result *= base;
    return result;
}

int support_genus(PrimeDegree d, const ExponentVector& v) {
    const int k = static_cast<int>(support(v).size());
    const long long twice = static_cast<long long>(d.value() - 1) * (k - 2);
    if (twice < 0 || twice % 2 != 0)
        fail(errc::internal_inconsistency, "support formula gives no valid genus");
    const int g = static_cast<int>(twice / 2);
    const int profile_route = genus_from_profile(ramification_profile(d, v));
    if (g != profile_route)
        fail(errc::internal_inconsistency, "support-formula genus disagrees with profile genus");
    return g;
}

} // namespace

CoverSpec::CoverSpec(CyclicCurve base, ExponentVector beta)
    : base_(std::move(base)), beta_(std::move(beta)) {
    if (beta_.modulus() != base_.degree())
        fail(errc::modulus_mismatch, "beta modulus differs from curve degree");
    if (beta_.size() != static_cast<std::size_t>(base_.branch_count()))
        fail(errc::length_mismatch, "beta length differs from branch point count");
    if (degree_sum_residue(beta_) != 0)
        fail(errc::not_degree_zero, "beta must lie in the degree-zero hyperplane");
    if (span_membership(beta_, base_.alpha()).has_value())
        fail(errc::trivial_cover, "beta is a multiple of alpha and defines no cover");
}

std::vector<CoverSpec> all_covers(const CyclicCurve& curve) {
    std::vector<CoverSpec> covers;
    for (const ExponentVector& v :
         enumerate_degree_zero(curve.degree(), curve.branch_count())) {
        if (v.is_zero())
            continue; // canonical of the trivial coset
        if (coset_canonical(v, curve.alpha()) == v)
            covers.emplace_back(curve, v);
    }
    return covers;
}

int cover_genus(const CoverSpec& cover) {
    const int d = cover.base().degree().value();
    const int r = cover.base().branch_count();
    const long long twice = static_cast<long long>(d - 1) * (r * d - 2 * d - 2);
    if (twice < 0 || twice % 2 != 0)
        fail(errc::internal_inconsistency, "cover genus closed form is not a valid genus");
    const int closed_form = static_cast<int>(twice / 2);
    const int unramified_route = d * (base_genus(cover.base()) - 1) + 1;
    if (closed_form != unramified_route)
        fail(errc::internal_inconsistency,
             "cover genus closed form disagrees with the unramified-cover relation");
    return closed_form;
}

std::vector<std::size_t> support(const ExponentVector& beta) {
    std::vector<std::size_t> positions;
    for (std::size_t k = 0; k < beta.size(); ++k)
        if (beta[k] != 0)
            positions.push_back(k);
    return positions;
}

std::vector<std::pair<ExponentVector, int>> intermediate_quotients(const CoverSpec& cover) {
    const PrimeDegree d = cover.base().degree();
    const ExponentVector& alpha = cover.base().alpha();
    const ExponentVector& beta = cover.beta();
    std::vector<std::pair<ExponentVector, int>> quotients;
    quotients.reserve(static_cast<std::size_t>(d.value()));
    quotients.emplace_back(beta, support_genus(d, beta));
    for (int m = 1; m < d.value(); ++m) {
        ExponentVector v = linear_combine(m, alpha, -1, beta);
        int g = support_genus(d, v);
        quotients.emplace_back(std::move(v), g);
    }
    return quotients;
}

bool paper_iso_related(const ExponentVector& beta1, const ExponentVector& beta2,
                       const ExponentVector& alpha) {
    if (beta1 == beta2)
        return true;
    ExponentVector sum = linear_combine(1, beta1, 1, beta2);
    auto m = span_membership(sum, alpha);
    return m.has_value() && *m != 0;
}

bool isomorphic_as_covers(const ExponentVector& beta1, const ExponentVector& beta2,
                          const ExponentVector& alpha) {
    const int d = alpha.modulus().value();
    for (int m = 0; m < d; ++m) {
        if (linear_combine(m, alpha, 1, beta1) == beta2)
            return true;
        if (linear_combine(m, alpha, -1, beta1) == beta2)
            return true;
    }
    return false;
}

std::vector<IsoClass> iso_classes(const CyclicCurve& curve) {
    const PrimeDegree d = curve.degree();
    const ExponentVector& alpha = curve.alpha();
    std::vector<IsoClass> classes;
    std::set<std::vector<int>> assigned;
    for (const ExponentVector& v : enumerate_degree_zero(d, curve.branch_count())) {
        if (span_membership(v, alpha).has_value())
            continue; // trivial coset
        if (assigned.count(v.entries()))
            continue;
        std::set<ExponentVector> members;
        for (int m = 0; m < d.value(); ++m) {
            members.insert(linear_combine(m, alpha, 1, v));
            members.insert(linear_combine(m, alpha, -1, v));
        }
        IsoClass cls{std::vector<ExponentVector>(members.begin(), members.end()),
                     *members.begin(),
                     {}};
        for (const ExponentVector& member : cls.members)
            assigned.insert(member.entries());
        // Quotient genera from the canonical member; invariant across members.
        for (auto& [vec, genus] : intermediate_quotients(CoverSpec(curve, cls.canonical)))
            cls.quotient_genera.push_back(genus);
        std::sort(cls.quotient_genera.begin(), cls.quotient_genera.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

long long count_by_support_oracle(const CyclicCurve& curve, int k, bool include_trivial) {
    if (k < 0 || k > static_cast<int>(curve.branch_count()))
        fail(errc::invalid_argument, "support size outside [0, r]");
    long long count = 0;
    for (const ExponentVector& v :
         enumerate_degree_zero(curve.degree(), curve.branch_count())) {
        if (static_cast<int>(support(v).size()) != k)
            continue;
        if (!include_trivial && span_membership(v, curve.alpha()).has_value())
            continue;
        ++count;
    }
    return count;
}

long long count_formula_corrected(PrimeDegree d, int r, int k) {
    if (k < 0 || k > r)
        fail(errc::invalid_argument, "support size outside [0, r]");
    const long long dv = d.value();
    const long long sign = (k % 2 == 0) ? 1 : -1;
    const long long numerator = ipow(dv - 1, k) + sign * (dv - 1);
    if (numerator % dv != 0)
        fail(errc::internal_inconsistency, "corrected count numerator not divisible by d");
    return binomial(r, k) * (numerator / dv);
}

BigRational count_formula_paper(PrimeDegree d, int r, int k) {
    if (k < 0 || k > r)
        fail(errc::invalid_argument, "support size outside [0, r]");
    const BigRational dv(d.value());
    const BigRational one_minus = BigRational(1) - dv.reciprocal();
    const BigRational sign((k % 2 == 0) ? 1 : -1);
    BigRational inner = one_minus.pow(k) * dv.pow(k - 1) - sign / dv;
    return BigRational(binomial(r, k)) * inner;
}

QuotientGenusListing covers_by_quotient_genus(const CyclicCurve& curve, int quotient_genus) {
    QuotientGenusListing listing;
    const int dm1 = curve.degree().value() - 1;
    if (quotient_genus < 0 || (2 * quotient_genus) % dm1 != 0) {
        listing.diagnostic = "no support size gives quotient genus " +
                             std::to_string(quotient_genus) + ": (d-1) must divide 2*g0";
        return listing;
    }
    const int k = (2 * quotient_genus) / dm1 + 2;
    if (k < 2 || k > static_cast<int>(curve.branch_count())) {
        listing.diagnostic = "support size " + std::to_string(k) + " for quotient genus " +
                             std::to_string(quotient_genus) + " is outside [2, r]";
        return listing;
    }
    for (const ExponentVector& v :
         enumerate_degree_zero(curve.degree(), curve.branch_count())) {
        if (static_cast<int>(support(v).size()) != k)
            continue;
        if (span_membership(v, curve.alpha()).has_value())
            continue;
        listing.vectors.push_back(v);
    }
    return listing;
}

} // namespace cycov
