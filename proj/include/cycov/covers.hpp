#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cycov/curves.hpp"
#include "cycov/rational.hpp"

namespace cycov {

/// A strongly cyclic cover of a base curve: the fiber-product normalization
/// attached to an exponent vector beta in the degree-zero hyperplane that is
/// not a multiple of alpha (multiples of alpha give the trivial cover).
class CoverSpec {
public:
    CoverSpec(CyclicCurve base, ExponentVector beta);

    const CyclicCurve& base() const noexcept { return base_; }
    const ExponentVector& beta() const noexcept { return beta_; }

private:
    CyclicCurve base_;
    ExponentVector beta_;
};

/// An isomorphism class of covers: the orbit {m*alpha + beta} u {m*alpha - beta}.
struct IsoClass {
    std::vector<ExponentVector> members; // sorted lexicographically
    ExponentVector canonical;            // members.front()
    std::vector<int> quotient_genera;    // sorted multiset, invariant of the class
};

/// One cover per nonzero coset of the hyperplane mod <alpha>, represented by
/// its canonical vector, in lexicographic order. Exactly d^(r-2) - 1 items.
std::vector<CoverSpec> all_covers(const CyclicCurve& curve);

/// (d-1)(rd-2d-2)/2, cross-checked against d*(g-1)+1 for g the base genus.
int cover_genus(const CoverSpec& cover);

/// Positions with a nonzero entry (the set A_beta), ascending.
std::vector<std::size_t> support(const ExponentVector& beta);

/// The d intermediate quotient curves the cover maps onto: (beta, g_0) first,
/// then (m*alpha - beta, g_m) for m = 1..d-1, with g = (d-1)(|A|-2)/2 checked
/// against the Riemann-Hurwitz profile route.
std::vector<std::pair<ExponentVector, int>> intermediate_quotients(const CoverSpec& cover);

/// The literal relation: beta1 = beta2, or beta1 + beta2 = m*alpha for some
/// m in [1, d). Not transitive; see isomorphic_as_covers for the closure.
bool paper_iso_related(const ExponentVector& beta1, const ExponentVector& beta2,
                       const ExponentVector& alpha);

/// Equivalence closure: beta2 in {m*alpha + beta1} u {m*alpha - beta1}.
bool isomorphic_as_covers(const ExponentVector& beta1, const ExponentVector& beta2,
                          const ExponentVector& alpha);

/// Partition of all d^(r-1) - d valid cover vectors into isomorphism classes,
/// ordered by canonical member.
std::vector<IsoClass> iso_classes(const CyclicCurve& curve);

/// Number of degree-zero vectors with support size exactly k, by exhaustive
/// enumeration. include_trivial = false drops the multiples of alpha.
long long count_by_support_oracle(const CyclicCurve& curve, int k, bool include_trivial);

/// C(r,k) * ((d-1)^k + (-1)^k (d-1)) / d: the closed-form count of degree-zero
/// vectors with support size k. Matches the oracle with include_trivial = true.
long long count_formula_corrected(PrimeDegree d, int r, int k);

/// The published closed form C(r,k) * ((1 - 1/d)^k d^(k-1) - (-1)^k / d),
/// evaluated exactly as a rational for audit; it can disagree with the oracle.
BigRational count_formula_paper(PrimeDegree d, int r, int k);

struct QuotientGenusListing {
    std::vector<ExponentVector> vectors; // lexicographic order
    std::string diagnostic;              // nonempty when no support size fits g0
};

/// All valid cover vectors whose quotient curve C_beta has genus g0, i.e.
/// support size k = 2*g0/(d-1) + 2. Divisibility or range failures yield an
/// empty listing with a diagnostic.
QuotientGenusListing covers_by_quotient_genus(const CyclicCurve& curve, int quotient_genus);

} // namespace cycov
