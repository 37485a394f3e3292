#pragma once

/// @file cyclotomic.hpp
/// @brief Exact arithmetic in Q(zeta_m) = Q[x]/Phi_m(x).

#include <string>

#include "ale/polynomial.hpp"

namespace ale {

// The m-th cyclotomic polynomial, computed exactly by iterated division of
// x^m - 1 by Phi_d for proper divisors d; results are cached per order.
const Polynomial& cyclotomic_polynomial(int m);

// Element of Q(zeta_m): representative polynomial of degree < deg(Phi_m).
// Operations between different orders throw MixedFieldError.
class Cyclotomic {
public:
    Cyclotomic() : order_(1), rep_() {}
    Cyclotomic(int order, Polynomial rep);

    static Cyclotomic zero(int order) { return Cyclotomic(order, Polynomial()); }
    static Cyclotomic one(int order) { return Cyclotomic(order, Polynomial(Rational(1))); }
    static Cyclotomic from_rational(int order, const Rational& q) { return Cyclotomic(order, Polynomial(q)); }
    // zeta_m^power (power taken mod m).
    static Cyclotomic root(int order, long power);

    int order() const { return order_; }
    const Polynomial& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }
    bool is_rational() const { return rep_.degree() <= 0; }
    Rational rational_part() const { return rep_.coeff(0); }

    Cyclotomic operator-() const { return Cyclotomic(order_, -rep_); }
    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this = *this / o; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.order_ == b.order_ && a.rep_ == b.rep_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    // Extended Euclid against Phi_m; throws DivisionByZero on zero.
    Cyclotomic inverse() const;

    std::string str() const { return rep_.str("z") + " (order " + std::to_string(order_) + ")"; }

private:
    void check_same(const Cyclotomic& o) const;
    int order_;
    Polynomial rep_;
};

// Exact closed form for 1/(zeta_m^t - 1) (t != 0 mod m):
//   1/(xi - 1) = (1/n) * sum_{j=0}^{n-1} j * xi^j   for xi a primitive n-th root.
// Avoids the Euclid path in the hot Appendix-B loops.
Cyclotomic inv_root_minus_one(int order, long t);

} // namespace ale
