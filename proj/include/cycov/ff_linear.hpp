#pragma once

#include <optional>
#include <vector>

#include "cycov/errors.hpp"

namespace cycov {

/// A prime number d >= 2, the degree of the cyclic map.
class PrimeDegree {
public:
    explicit PrimeDegree(int d);

    int value() const noexcept { return d_; }

    friend bool operator==(PrimeDegree a, PrimeDegree b) noexcept { return a.d_ == b.d_; }
    friend bool operator!=(PrimeDegree a, PrimeDegree b) noexcept { return a.d_ != b.d_; }

private:
    int d_;
};

/// A function from the r branch positions to residues mod d. Entries are
/// stored in [0, d) and indexed 0..r-1 in branch-point list order.
class ExponentVector {
public:
    ExponentVector(PrimeDegree d, std::vector<int> entries);

    PrimeDegree modulus() const noexcept { return d_; }
    const std::vector<int>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    int operator[](std::size_t k) const { return entries_[k]; }

    bool is_zero() const noexcept;

    friend bool operator==(const ExponentVector& a, const ExponentVector& b) noexcept {
        return a.d_ == b.d_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const ExponentVector& a, const ExponentVector& b) noexcept {
        return !(a == b);
    }
    // Lexicographic on entries; only meaningful for vectors sharing d.
    friend bool operator<(const ExponentVector& a, const ExponentVector& b) noexcept {
        return a.entries_ < b.entries_;
    }

private:
    PrimeDegree d_;
    std::vector<int> entries_;
};

/// Entrywise residues of raw integers in [0, d).
ExponentVector reduce(const std::vector<long long>& raw, PrimeDegree d);

/// reduce(c1*v1 + c2*v2) entrywise; v1, v2 must share d and length.
ExponentVector linear_combine(long long c1, const ExponentVector& v1,
                              long long c2, const ExponentVector& v2);

/// Sum of entries mod d. Zero means v lies in the degree-zero hyperplane.
int degree_sum_residue(const ExponentVector& v);

/// The unique m in [0, d) with v = m*alpha, if it exists. alpha must be nonzero.
std::optional<int> span_membership(const ExponentVector& v, const ExponentVector& alpha);

/// All d^(r-1) vectors of length r with zero residue sum, in lexicographic order.
std::vector<ExponentVector> enumerate_degree_zero(PrimeDegree d, int r);

/// Lexicographically smallest element of the coset {v + m*alpha : 0 <= m < d}.
/// Both vectors must lie in the degree-zero hyperplane; alpha must be nonzero.
ExponentVector coset_canonical(const ExponentVector& v, const ExponentVector& alpha);

} // namespace cycov
