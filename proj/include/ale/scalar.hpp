#pragma once

/// @file scalar.hpp
/// @brief Uniform protocol for coefficient rings (Rational, RatFunc,
/// Cyclotomic, Jet<...>) used by the graded series layer.
///
/// A series scalar must be default-constructible as zero and support ==, +,
/// -, * plus the free functions below. Everything is exact; there is no
/// floating point anywhere in the artifact.

#include "ale/cyclotomic.hpp"
#include "ale/ratfunc.hpp"
#include "ale/rational.hpp"

namespace ale {

inline bool scalar_is_zero(const Rational& v) { return v == 0; }
inline bool scalar_is_zero(const RatFunc& v) { return v.is_zero(); }
inline bool scalar_is_zero(const Cyclotomic& v) { return v.is_zero(); }

// 1 in the same field instantiation as the argument.
inline Rational scalar_one_like(const Rational&) { return Rational(1); }
inline RatFunc scalar_one_like(const RatFunc&) { return RatFunc(Rational(1)); }
inline Cyclotomic scalar_one_like(const Cyclotomic& v) { return Cyclotomic::one(v.order()); }

// Nilpotency drives termination of exp/log/geometric loops; in a field only 0
// is nilpotent.
inline bool scalar_is_nilpotent(const Rational& v) { return v == 0; }
inline bool scalar_is_nilpotent(const RatFunc& v) { return v.is_zero(); }
inline bool scalar_is_nilpotent(const Cyclotomic& v) { return v.is_zero(); }

inline bool scalar_is_invertible(const Rational& v) { return v != 0; }
inline bool scalar_is_invertible(const RatFunc& v) { return !v.is_zero(); }
inline bool scalar_is_invertible(const Cyclotomic& v) { return !v.is_zero(); }

inline Rational scalar_inverse(const Rational& v) {
    if (v == 0) throw DivisionByZero("rational");
    return Rational(1) / v;
}
inline RatFunc scalar_inverse(const RatFunc& v) { return RatFunc(Rational(1)) / v; }
inline Cyclotomic scalar_inverse(const Cyclotomic& v) { return v.inverse(); }

inline Rational scalar_mul_rat(const Rational& v, const Rational& r) { return v * r; }
inline RatFunc scalar_mul_rat(const RatFunc& v, const Rational& r) { return v * RatFunc(r); }
inline Cyclotomic scalar_mul_rat(const Cyclotomic& v, const Rational& r) {
    return v * Cyclotomic::from_rational(v.order(), r);
}

inline std::string scalar_str(const Rational& v) { return to_string(v); }
inline std::string scalar_str(const RatFunc& v) { return v.str(); }
inline std::string scalar_str(const Cyclotomic& v) { return v.str(); }

} // namespace ale
