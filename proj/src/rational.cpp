#include "cycov/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>

namespace cycov {

namespace {

bool is_plain_integer(std::string_view s) {
    if (s.empty())
        return false;
    std::size_t start = (s[0] == '-') ? 1 : 0;
    if (start == s.size())
        return false;
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

// Decimal integer without leading zeros; "-0" is not canonical.
bool is_canonical_integer(std::string_view s) {
    if (!is_plain_integer(s))
        return false;
    std::size_t start = (s[0] == '-') ? 1 : 0;
    std::string_view digits = s.substr(start);
    if (digits.size() > 1 && digits[0] == '0')
        return false;
    if (start == 1 && digits == "0")
        return false;
    return true;
}

} // namespace

BigRational::BigRational(long long num, long long den) {
    if (den == 0)
        fail(errc::division_by_zero, "rational with zero denominator");
    value_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
    value_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
    std::string_view num = text;
    std::string_view den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!is_plain_integer(num) || !is_plain_integer(den))
        fail(errc::invalid_rational, "malformed rational '" + std::string(text) + "'");
    BigRational result;
    result.value_ = mpq_class(mpz_class(std::string(num), 10), mpz_class(std::string(den), 10));
    if (result.value_.get_den() == 0)
        fail(errc::division_by_zero, "rational with zero denominator: '" + std::string(text) + "'");
    result.value_.canonicalize();
    return result;
}

BigRational BigRational::parse_canonical(std::string_view text) {
    std::string_view num = text;
    std::string_view den;
    bool has_den = false;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        has_den = true;
    }
    if (!is_canonical_integer(num))
        fail(errc::invalid_rational, "non-canonical rational '" + std::string(text) + "'");
    if (has_den && (!is_canonical_integer(den) || den[0] == '-' || den == "0"))
        fail(errc::invalid_rational, "non-canonical rational '" + std::string(text) + "'");
    BigRational result;
    mpz_class p(std::string(num), 10);
    mpz_class q = has_den ? mpz_class(std::string(den), 10) : mpz_class(1);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (q != 1 && g != 1)
        fail(errc::invalid_rational, "rational not in lowest terms: '" + std::string(text) + "'");
    result.value_ = mpq_class(p, q);
    result.value_.canonicalize();
    return result;
}

std::string BigRational::to_string() const {
    return value_.get_str();
}

BigRational BigRational::abs() const {
    BigRational r;
    r.value_ = ::abs(value_);
    return r;
}

BigRational BigRational::reciprocal() const {
    if (is_zero())
        fail(errc::division_by_zero, "reciprocal of zero");
    BigRational r;
    r.value_ = 1 / value_;
    return r;
}

BigRational BigRational::pow(long long exponent) const {
    if (exponent == 0)
        return BigRational(1);
    const BigRational base = exponent < 0 ? reciprocal() : *this;
    unsigned long long e = exponent < 0
        ? static_cast<unsigned long long>(-(exponent + 1)) + 1ULL
        : static_cast<unsigned long long>(exponent);
    BigRational result(1);
    BigRational acc = base;
    while (e > 0) {
        if (e & 1ULL)
            result *= acc;
        e >>= 1;
        if (e > 0)
            acc *= acc;
    }
    return result;
}

long long BigRational::to_integer() const {
    if (!is_integer())
        fail(errc::inexact_division, "rational " + to_string() + " is not an integer");
    mpz_class n = value_.get_num();
    if (!n.fits_slong_p())
        fail(errc::invalid_argument, "integer value out of range: " + to_string());
    return n.get_si();
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero())
        fail(errc::division_by_zero, "division by zero rational");
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const BigRational& q) {
    return os << q.to_string();
}

} // namespace cycov
