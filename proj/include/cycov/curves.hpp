#pragma once

#include <utility>
#include <vector>

#include "cycov/ff_linear.hpp"
#include "cycov/rational.hpp"

namespace cycov {

/// A curve y^d = prod (x - b_i)^{alpha_i} with a degree-d cyclic map to the
/// line, unramified over infinity. Construction validates everything:
/// d prime, r >= 3 distinct rational branch points, full-support alpha with
/// zero residue sum. Raw alpha entries are reduced mod d first.
class CyclicCurve {
public:
    CyclicCurve(PrimeDegree d, std::vector<BigRational> branch_points,
                const std::vector<long long>& alpha_raw);

    PrimeDegree degree() const noexcept { return alpha_.modulus(); }
    const std::vector<BigRational>& branch_points() const noexcept { return branch_points_; }
    const ExponentVector& alpha() const noexcept { return alpha_; }
    int branch_count() const noexcept { return static_cast<int>(branch_points_.size()); }

private:
    std::vector<BigRational> branch_points_;
    ExponentVector alpha_;
};

/// Ramification data of a degree-d map to the line: per branch value a list
/// of (preimage count, ramification index) pairs, plus one entry for infinity.
struct RamificationProfile {
    using Entry = std::vector<std::pair<int, int>>; // (count, index)

    int degree = 0;
    std::vector<Entry> finite;
    Entry at_infinity;
};

/// Profile of z^d = prod (x - b_i)^{e_i} over the line: positions with a
/// nonzero exponent are totally ramified (gcd(e, d) = 1 since d is prime),
/// zero positions and infinity split completely.
RamificationProfile ramification_profile(PrimeDegree d, const ExponentVector& exponents);

/// Genus from 2g - 2 = -2*degree + sum over all points of (index - 1).
/// Rejects profiles whose formula value is negative or non-integral.
int genus_from_profile(const RamificationProfile& profile);

/// (r-2)(d-1)/2, cross-checked against the Riemann-Hurwitz profile route.
int base_genus(const CyclicCurve& curve);

/// 2g/(d-1) + 2; error when (d-1) does not divide 2g.
int expected_branch_count(int genus, PrimeDegree d);

} // namespace cycov
