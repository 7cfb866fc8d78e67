#include "cycov/polynomial.hpp"

#include <algorithm>

namespace cycov {

namespace {

void trim(std::vector<BigRational>& coefficients) {
    while (!coefficients.empty() && coefficients.back().is_zero())
        coefficients.pop_back();
}

Polynomial make_monic(const Polynomial& p) {
    if (p.is_zero())
        return p;
    return p.leading_coefficient().reciprocal() * p;
}

} // namespace

Polynomial::Polynomial(std::vector<BigRational> coefficients)
    : coefficients_(std::move(coefficients)) {
    trim(coefficients_);
}

Polynomial Polynomial::constant(BigRational c) {
    std::vector<BigRational> coefficients;
    if (!c.is_zero())
        coefficients.push_back(std::move(c));
    return Polynomial(std::move(coefficients));
}

Polynomial Polynomial::monomial(BigRational c, int degree) {
    if (degree < 0)
        fail(errc::invalid_argument, "monomial degree must be nonnegative");
    if (c.is_zero())
        return Polynomial();
    std::vector<BigRational> coefficients(static_cast<std::size_t>(degree) + 1);
    coefficients.back() = std::move(c);
    return Polynomial(std::move(coefficients));
}

const BigRational& Polynomial::leading_coefficient() const {
    if (is_zero())
        fail(errc::invalid_argument, "zero polynomial has no leading coefficient");
    return coefficients_.back();
}

BigRational Polynomial::coefficient(int k) const {
    if (k < 0 || k > degree())
        return BigRational(0);
    return coefficients_[static_cast<std::size_t>(k)];
}

BigRational Polynomial::evaluate(const BigRational& x) const {
    BigRational result(0);
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
        result = result * x + *it;
    return result;
}

Polynomial Polynomial::derivative() const {
    if (degree() < 1)
        return Polynomial();
    std::vector<BigRational> coefficients;
    coefficients.reserve(coefficients_.size() - 1);
    for (std::size_t k = 1; k < coefficients_.size(); ++k)
        coefficients.push_back(BigRational(static_cast<long long>(k)) * coefficients_[k]);
    return Polynomial(std::move(coefficients));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (coefficients_.size() < o.coefficients_.size())
        coefficients_.resize(o.coefficients_.size());
    for (std::size_t k = 0; k < o.coefficients_.size(); ++k)
        coefficients_[k] += o.coefficients_[k];
    trim(coefficients_);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (coefficients_.size() < o.coefficients_.size())
        coefficients_.resize(o.coefficients_.size());
    for (std::size_t k = 0; k < o.coefficients_.size(); ++k)
        coefficients_[k] -= o.coefficients_[k];
    trim(coefficients_);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero())
        return Polynomial();
    std::vector<BigRational> coefficients(a.coefficients_.size() + b.coefficients_.size() - 1);
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i)
        for (std::size_t j = 0; j < b.coefficients_.size(); ++j)
            coefficients[i + j] += a.coefficients_[i] * b.coefficients_[j];
    return Polynomial(std::move(coefficients));
}

Polynomial operator*(const BigRational& c, const Polynomial& p) {
    if (c.is_zero())
        return Polynomial();
    std::vector<BigRational> coefficients = p.coefficients_;
    for (auto& coefficient : coefficients)
        coefficient *= c;
    return Polynomial(std::move(coefficients));
}

Polynomial operator-(const Polynomial& p) {
    return BigRational(-1) * p;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& numerator,
                                         const Polynomial& divisor) {
    if (divisor.is_zero())
        fail(errc::division_by_zero, "polynomial division by zero");
    Polynomial quotient;
    Polynomial remainder = numerator;
    const BigRational& lead = divisor.leading_coefficient();
    while (!remainder.is_zero() && remainder.degree() >= divisor.degree()) {
        BigRational factor = remainder.leading_coefficient() / lead;
        int shift = remainder.degree() - divisor.degree();
        Polynomial term = Polynomial::monomial(factor, shift);
        quotient += term;
        remainder -= term * divisor;
    }
    return {std::move(quotient), std::move(remainder)};
}

Polynomial exact_divide(const Polynomial& numerator, const Polynomial& divisor) {
    auto [quotient, remainder] = divmod(numerator, divisor);
    if (!remainder.is_zero())
        fail(errc::inexact_division, "polynomial division leaves a remainder");
    return quotient;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a;
    Polynomial y = b;
    while (!y.is_zero()) {
        Polynomial r = divmod(x, y).second;
        x = std::move(y);
        y = make_monic(r); // monic remainders keep coefficients small
    }
    return make_monic(x);
}

Polynomial pow(const Polynomial& base, int exponent) {
    if (exponent < 0)
        fail(errc::invalid_argument, "polynomial power must be nonnegative");
    Polynomial result = Polynomial::constant(BigRational(1));
    Polynomial acc = base;
    int e = exponent;
    while (e > 0) {
        if (e & 1)
            result = result * acc;
        e >>= 1;
        if (e > 0)
            acc = acc * acc;
    }
    return result;
}

bool is_squarefree(const Polynomial& p) {
    if (p.is_zero())
        return false;
    if (p.degree() == 0)
        return true;
    return gcd(p, p.derivative()).degree() == 0;
}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero())
        fail(errc::division_by_zero, "rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial::constant(BigRational(1));
        return;
    }
    Polynomial common = gcd(num_, den_);
    if (common.degree() > 0) {
        num_ = exact_divide(num_, common);
        den_ = exact_divide(den_, common);
    }
    BigRational lead = den_.leading_coefficient();
    if (!lead.is_one()) {
        BigRational inv = lead.reciprocal();
        num_ = inv * num_;
        den_ = inv * den_;
    }
}

BigRational RationalFunction::evaluate(const BigRational& x) const {
    BigRational den_value = den_.evaluate(x);
    if (den_value.is_zero())
        fail(errc::division_by_zero, "evaluation at a pole");
    return num_.evaluate(x) / den_value;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero())
        fail(errc::division_by_zero, "division by zero rational function");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    normalize();
    return *this;
}

RationalFunction pow(const RationalFunction& base, int exponent) {
    if (exponent < 0) {
        if (base.is_zero())
            fail(errc::division_by_zero, "negative power of zero");
        RationalFunction inverse(base.denominator(), base.numerator());
        return pow(inverse, -exponent);
    }
    RationalFunction result(Polynomial::constant(BigRational(1)));
    RationalFunction acc = base;
    int e = exponent;
    while (e > 0) {
        if (e & 1)
            result *= acc;
        e >>= 1;
        if (e > 0)
            acc *= acc;
    }
    return result;
}

RationalFunction compose(const Polynomial& p, const RationalFunction& f) {
    RationalFunction result;
    for (int k = p.degree(); k >= 0; --k) {
        result *= f;
        result += RationalFunction(Polynomial::constant(p.coefficient(k)));
    }
    return result;
}

} // namespace cycov
