#pragma once

/// @file polynomial.hpp
/// @brief Dense univariate polynomials over Rational.

#include <string>
#include <vector>

#include "ale/rational.hpp"

namespace ale {

// Coefficients ascending in degree; no trailing zeros; empty vector is 0.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Rational constant) {
        if (constant != 0) c_.push_back(std::move(constant));
    }
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial x() { return Polynomial(std::vector<Rational>{Rational(0), Rational(1)}); }
    static Polynomial monomial(const Rational& coeff, int degree);

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
    }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational eval(const Rational& x) const;
    Polynomial derivative() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    friend Polynomial operator*(const Polynomial& a, const Rational& s);

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    std::string str(const std::string& var = "x") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

// Euclidean division: a = q*b + r with deg r < deg b. Throws on b = 0.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

// Monic gcd (gcd(0,0) = 0).
Polynomial poly_gcd(Polynomial a, Polynomial b);

// Extended Euclid: returns (g, s, t) monic g with s*a + t*b = g.
std::tuple<Polynomial, Polynomial, Polynomial> poly_ext_gcd(const Polynomial& a, const Polynomial& b);

} // namespace ale
