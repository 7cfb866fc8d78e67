#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "cycov/errors.hpp"

namespace cycov {

// Arbitrary-precision rational. Always normalized: denominator > 0,
// gcd(|numerator|, denominator) = 1.
class BigRational {
public:
    BigRational() : value_(0) {}
    BigRational(long long n) : value_(static_cast<long>(n)) {}
    BigRational(long long num, long long den);

    // Accepts "p" or "p/q" with arbitrary integers, q != 0; normalizes.
    static BigRational parse(std::string_view text);
    // Accepts only the canonical on-disk form: decimal integers without
    // leading zeros, q > 0, gcd(|p|, q) = 1 ("5/1" is allowed, "-0" is not).
    static BigRational parse_canonical(std::string_view text);

    std::string to_string() const;

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    BigRational abs() const;
    BigRational reciprocal() const;
    // Integer exponent; negative exponents invert (error on zero base).
    BigRational pow(long long exponent) const;

    // Returns the exact integer value; error when not an integer or out of range.
    long long to_integer() const;

    BigRational& operator+=(const BigRational& o) { value_ += o.value_; return *this; }
    BigRational& operator-=(const BigRational& o) { value_ -= o.value_; return *this; }
    BigRational& operator*=(const BigRational& o) { value_ *= o.value_; return *this; }
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
    friend BigRational operator-(const BigRational& a) {
        BigRational r;
        r.value_ = -a.value_;
        return r;
    }

    friend bool operator==(const BigRational& a, const BigRational& b) {
        return a.value_ == b.value_;
    }
    friend bool operator!=(const BigRational& a, const BigRational& b) {
        return !(a == b);
    }
    friend bool operator<(const BigRational& a, const BigRational& b) {
        return a.value_ < b.value_;
    }
    friend bool operator<=(const BigRational& a, const BigRational& b) {
        return a.value_ <= b.value_;
    }
    friend bool operator>(const BigRational& a, const BigRational& b) { return b < a; }
    friend bool operator>=(const BigRational& a, const BigRational& b) { return b <= a; }

    friend std::ostream& operator<<(std::ostream& os, const BigRational& q);

private:
    mpq_class value_;
};

} // namespace cycov
