#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cycov/rational.hpp"

namespace cycov {

/// Dense univariate polynomial over the rationals, coefficients lowest degree
/// first. The zero polynomial has an empty coefficient list.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<BigRational> coefficients);

    static Polynomial constant(BigRational c);
    static Polynomial monomial(BigRational c, int degree);

    int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
    bool is_zero() const noexcept { return coefficients_.empty(); }
    const std::vector<BigRational>& coefficients() const noexcept { return coefficients_; }
    const BigRational& leading_coefficient() const;
    /// Coefficient of x^k, zero beyond the degree.
    BigRational coefficient(int k) const;

    BigRational evaluate(const BigRational& x) const;
    Polynomial derivative() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const BigRational& c, const Polynomial& p);
    friend Polynomial operator-(const Polynomial& p);

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coefficients_ == b.coefficients_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    std::vector<BigRational> coefficients_;
};

/// Quotient and remainder with deg(remainder) < deg(divisor).
std::pair<Polynomial, Polynomial> divmod(const Polynomial& numerator,
                                         const Polynomial& divisor);

/// Quotient when the division is exact; error otherwise.
Polynomial exact_divide(const Polynomial& numerator, const Polynomial& divisor);

/// Monic greatest common divisor (zero for gcd(0, 0)).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

Polynomial pow(const Polynomial& base, int exponent);

/// True when gcd(p, p') is constant.
bool is_squarefree(const Polynomial& p);

/// Exact rational function, kept normalized: numerator and denominator
/// coprime, denominator monic. Zero is 0/1.
class RationalFunction {
public:
    RationalFunction() : den_(Polynomial::constant(BigRational(1))) {}
    RationalFunction(Polynomial numerator, Polynomial denominator);
    explicit RationalFunction(Polynomial numerator)
        : RationalFunction(std::move(numerator), Polynomial::constant(BigRational(1))) {}

    const Polynomial& numerator() const noexcept { return num_; }
    const Polynomial& denominator() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.degree() == 0; }

    /// Error on evaluation at a pole.
    BigRational evaluate(const BigRational& x) const;

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

private:
    void normalize();

    Polynomial num_;
    Polynomial den_;
};

/// Integer exponent; negative exponents invert (error on zero base).
RationalFunction pow(const RationalFunction& base, int exponent);

/// p(f) for a polynomial p and rational function f.
RationalFunction compose(const Polynomial& p, const RationalFunction& f);

} // namespace cycov
