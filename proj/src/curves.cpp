#include "cycov/curves.hpp"

#include <string>

namespace cycov {

namespace {

ExponentVector validated_alpha(PrimeDegree d, std::size_t r, const std::vector<long long>& raw) {
    if (raw.size() != r)
        fail(errc::length_mismatch, "curve has " + std::to_string(r) + " branch points but " +
                                        std::to_string(raw.size()) + " exponents");
    ExponentVector alpha = reduce(raw, d);
    for (std::size_t k = 0; k < alpha.size(); ++k)
        if (alpha[k] == 0)
            fail(errc::zero_exponent, "exponent at position " + std::to_string(k) + " is 0 mod d");
    if (degree_sum_residue(alpha) != 0)
        fail(errc::ramified_at_infinity, "exponent sum is not 0 mod d");
    return alpha;
}

} // namespace

CyclicCurve::CyclicCurve(PrimeDegree d, std::vector<BigRational> branch_points,
                         const std::vector<long long>& alpha_raw)
    : branch_points_(std::move(branch_points)),
      alpha_(validated_alpha(d, branch_points_.size(), alpha_raw)) {
    if (branch_points_.size() < 3)
        fail(errc::too_few_branch_points,
             "need at least 3 branch points, got " + std::to_string(branch_points_.size()));
    for (std::size_t i = 0; i < branch_points_.size(); ++i)
        for (std::size_t j = i + 1; j < branch_points_.size(); ++j)
            if (branch_points_[i] == branch_points_[j])
                fail(errc::duplicate_branch_points,
                     "branch point " + branch_points_[i].to_string() + " repeats");
}

RamificationProfile ramification_profile(PrimeDegree d, const ExponentVector& exponents) {
    if (exponents.modulus() != d)
        fail(errc::modulus_mismatch, "exponent vector modulus differs from d");
    if (degree_sum_residue(exponents) != 0)
        fail(errc::not_degree_zero, "exponent sum is not 0 mod d; map would ramify over infinity");
    RamificationProfile profile;
    profile.degree = d.value();
    profile.finite.reserve(exponents.size());
    for (int e : exponents.entries()) {
        if (e != 0)
            profile.finite.push_back({{1, d.value()}});
        else
            profile.finite.push_back({{d.value(), 1}});
    }
    profile.at_infinity = {{d.value(), 1}};
    return profile;
}

int genus_from_profile(const RamificationProfile& profile) {
    if (profile.degree < 1)
        fail(errc::invalid_profile, "profile degree must be positive");
    auto check_entry = [&](const RamificationProfile::Entry& entry) {
        long long total = 0;
        for (auto [count, index] : entry) {
            if (count < 1 || index < 1)
                fail(errc::invalid_profile, "counts and indices must be at least 1");
            total += static_cast<long long>(count) * index;
        }
        if (total != profile.degree)
            fail(errc::invalid_profile, "branch value entry does not sum to the degree");
    };
    long long branch_contribution = 0;
    for (const auto& entry : profile.finite) {
        check_entry(entry);
        for (auto [count, index] : entry)
            branch_contribution += static_cast<long long>(count) * (index - 1);
    }
    check_entry(profile.at_infinity);
    for (auto [count, index] : profile.at_infinity)
        branch_contribution += static_cast<long long>(count) * (index - 1);

    long long twice_genus = -2LL * profile.degree + branch_contribution + 2;
    if (twice_genus < 0 || twice_genus % 2 != 0)
        fail(errc::invalid_profile,
             "Riemann-Hurwitz gives no valid genus (2g = " + std::to_string(twice_genus) + ")");
    return static_cast<int>(twice_genus / 2);
}

int base_genus(const CyclicCurve& curve) {
    const int d = curve.degree().value();
    const int r = curve.branch_count();
    const long long twice = static_cast<long long>(r - 2) * (d - 1);
    const int closed_form = static_cast<int>(twice / 2);
    const int profile_route =
        genus_from_profile(ramification_profile(curve.degree(), curve.alpha()));
    if (twice % 2 != 0 || closed_form != profile_route)
        fail(errc::internal_inconsistency,
             "genus closed form " + std::to_string(closed_form) +
                 " disagrees with profile route " + std::to_string(profile_route));
    return closed_form;
}

int expected_branch_count(int genus, PrimeDegree d) {
    if (genus < 0)
        fail(errc::invalid_argument, "genus must be nonnegative");
    const int dm1 = d.value() - 1;
    if ((2 * genus) % dm1 != 0)
        fail(errc::divisibility_failure,
             "no cyclic curve of genus " + std::to_string(genus) + " and degree " +
                 std::to_string(d.value()) + ": (d-1) does not divide 2g");
    return (2 * genus) / dm1 + 2;
}

} // namespace cycov
