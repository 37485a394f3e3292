#pragma once

/// @file rational.hpp
/// @brief Exact integers and rationals plus the Eigen glue used everywhere.
///
/// Every numeric quantity in this library is exact: q-exponents, Cartan data,
/// sample points, series coefficients. Rationals are boost::multiprecision
/// with expression templates off, so they behave as plain value scalars and
/// can be used as an Eigen matrix scalar.

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "ale/errors.hpp"

namespace ale {

using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

inline Int num(const Rational& q) { return numerator(q); }
inline Int den(const Rational& q) { return denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

// Floor of a rational as an exact integer.
inline Int ifloor(const Rational& q) {
    Int n = numerator(q), d = denominator(q);
    Int quo = n / d;
    if (n % d != 0 && n < 0) --quo;
    return quo;
}

inline Int iceil(const Rational& q) { return -ifloor(-q); }

// Fractional part in [0,1).
inline Rational frac(const Rational& q) { return q - Rational(ifloor(q)); }

// Exact nonnegative integer square root (floor).
inline Int isqrt(const Int& n) {
    if (n < 0) throw Error("isqrt of negative");
    if (n == 0) return 0;
    Int x = n, y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    return x;
}

inline int to_int(const Int& n) { return static_cast<int>(n); }

inline long rational_to_long(const Rational& q) {
    if (!is_integer(q)) throw Error("expected integer rational");
    return static_cast<long>(numerator(q));
}

inline std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

// Parses "p", "-p", or "p/q" with q > 0 after normalization.
inline Rational parse_rational(std::string_view text) {
    if (text.empty()) throw ConfigError("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(Int(std::string(text)));
        Int n{std::string(text.substr(0, slash))};
        Int d{std::string(text.substr(slash + 1))};
        if (d == 0) throw DivisionByZero("rational literal " + std::string(text));
        return Rational(n) / Rational(d);
    } catch (const std::runtime_error& e) {
        throw ConfigError("bad rational literal '" + std::string(text) + "'");
    }
}

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<long, Eigen::Dynamic, 1>;

} // namespace ale

namespace Eigen {

template <>
struct NumTraits<ale::Rational> : GenericNumTraits<ale::Rational> {
    typedef ale::Rational Real;
    typedef ale::Rational NonInteger;
    typedef ale::Rational Nested;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 32,
        MulCost = 32
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

} // namespace Eigen
