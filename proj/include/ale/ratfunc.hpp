#pragma once

/// @file ratfunc.hpp
/// @brief Univariate rational functions over Q: the carrier for the
/// slope substitution eps1 = x, eps2 = c*x used in the low-energy limits.

#include <string>
#include <utility>

#include "ale/polynomial.hpp"

namespace ale {

// Invariants: den monic and nonzero, gcd(num, den) = 1; zero is 0/1.
class RatFunc {
public:
    RatFunc() : num_(), den_(Rational(1)) {}
    /* implicit */ RatFunc(const Rational& constant) : num_(constant), den_(Rational(1)) {}
    /* implicit */ RatFunc(Polynomial p) : num_(std::move(p)), den_(Rational(1)) {}
    RatFunc(Polynomial numerator, Polynomial denominator) : num_(std::move(numerator)), den_(std::move(denominator)) {
        normalize();
    }

    static RatFunc x() { return RatFunc(Polynomial::x()); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw DivisionByZero("rational function");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    Rational eval(const Rational& x) const {
        Rational d = den_.eval(x);
        if (d == 0) throw DivisionByZero("rational function evaluated at pole");
        return num_.eval(x) / d;
    }

    std::string str(const std::string& var = "x") const {
        if (den_.degree() == 0) return num_.str(var);
        return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
    }

private:
    void normalize() {
        if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Polynomial(Rational(1));
            return;
        }
        Polynomial g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
        Rational lead = den_.leading();
        if (lead != 1) {
            Rational inv = Rational(1) / lead;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    Polynomial num_, den_;
};

// Value at x = 0 after gcd reduction; a vanishing reduced denominator at 0 is
// a genuine pole and throws PoleAtOrigin.
inline Rational limit_at_origin(const RatFunc& f) {
    Rational d0 = f.den().coeff(0);
    if (d0 == 0) throw PoleAtOrigin(f.str());
    return f.num().coeff(0) / d0;
}

} // namespace ale
