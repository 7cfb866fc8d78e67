#include "cycov/ff_linear.hpp"

#include <algorithm>
#include <string>

namespace cycov {

namespace {

bool is_prime(int n) {
    if (n < 2)
        return false;
    for (int p = 2; static_cast<long long>(p) * p <= n; ++p)
        if (n % p == 0)
            return false;
    return true;
}

int mod_residue(long long value, int d) {
    long long r = value % d;
    if (r < 0)
        r += d;
    return static_cast<int>(r);
}

void require_compatible(const ExponentVector& a, const ExponentVector& b) {
    if (a.modulus() != b.modulus())
        fail(errc::modulus_mismatch, "exponent vectors have different moduli");
    if (a.size() != b.size())
        fail(errc::length_mismatch, "exponent vectors have different lengths");
}

} // namespace

PrimeDegree::PrimeDegree(int d) : d_(d) {
    if (!is_prime(d))
        fail(errc::non_prime_degree, "degree " + std::to_string(d) + " is not prime");
}

ExponentVector::ExponentVector(PrimeDegree d, std::vector<int> entries)
    : d_(d), entries_(std::move(entries)) {
    if (entries_.empty())
        fail(errc::empty_vector, "exponent vector must have at least one entry");
    for (int e : entries_)
        if (e < 0 || e >= d_.value())
            fail(errc::entry_out_of_range,
                 "entry " + std::to_string(e) + " outside [0, " + std::to_string(d_.value()) + ")");
}

bool ExponentVector::is_zero() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](int e) { return e == 0; });
}

ExponentVector reduce(const std::vector<long long>& raw, PrimeDegree d) {
    std::vector<int> entries;
    entries.reserve(raw.size());
    for (long long v : raw)
        entries.push_back(mod_residue(v, d.value()));
    return ExponentVector(d, std::move(entries));
}

ExponentVector linear_combine(long long c1, const ExponentVector& v1,
                              long long c2, const ExponentVector& v2) {
    require_compatible(v1, v2);
    const int d = v1.modulus().value();
    std::vector<int> entries(v1.size());
    for (std::size_t k = 0; k < v1.size(); ++k) {
        long long cr1 = mod_residue(c1, d);
        long long cr2 = mod_residue(c2, d);
        entries[k] = mod_residue(cr1 * v1[k] + cr2 * v2[k], d);
    }
    return ExponentVector(v1.modulus(), std::move(entries));
}

int degree_sum_residue(const ExponentVector& v) {
    long long sum = 0;
    for (int e : v.entries())
        sum += e;
    return mod_residue(sum, v.modulus().value());
}

std::optional<int> span_membership(const ExponentVector& v, const ExponentVector& alpha) {
    require_compatible(v, alpha);
    if (alpha.is_zero())
        fail(errc::zero_vector, "span membership needs a nonzero alpha");
    const int d = v.modulus().value();
    for (int m = 0; m < d; ++m) {
        bool match = true;
        for (std::size_t k = 0; k < v.size() && match; ++k)
            match = (v[k] == mod_residue(static_cast<long long>(m) * alpha[k], d));
        if (match)
            return m;
    }
    return std::nullopt;
}

std::vector<ExponentVector> enumerate_degree_zero(PrimeDegree d, int r) {
    if (r < 1)
        fail(errc::invalid_argument, "vector length must be at least 1");
    const int dv = d.value();
    std::vector<ExponentVector> out;
    // The last entry is determined by the zero-sum constraint, so an odometer
    // over the first r-1 entries walks the hyperplane in lexicographic order.
    std::vector<int> prefix(static_cast<std::size_t>(r) - 1, 0);
    for (;;) {
        long long sum = 0;
        for (int e : prefix)
            sum += e;
        std::vector<int> entries = prefix;
        entries.push_back(mod_residue(-sum, dv));
        out.emplace_back(d, std::move(entries));

        int pos = static_cast<int>(prefix.size()) - 1;
        while (pos >= 0 && prefix[pos] == dv - 1)
            prefix[pos--] = 0;
        if (pos < 0)
            break;
        ++prefix[pos];
    }
    return out;
}

ExponentVector coset_canonical(const ExponentVector& v, const ExponentVector& alpha) {
    require_compatible(v, alpha);
    if (alpha.is_zero())
        fail(errc::zero_vector, "coset canonicalization needs a nonzero alpha");
    if (degree_sum_residue(v) != 0 || degree_sum_residue(alpha) != 0)
        fail(errc::not_degree_zero, "coset canonicalization needs degree-zero vectors");
    ExponentVector best = v;
    const int d = v.modulus().value();
    for (int m = 1; m < d; ++m) {
        ExponentVector candidate = linear_combine(1, v, m, alpha);
        if (candidate < best)
            best = candidate;
    }
    return best;
}

} // namespace cycov
