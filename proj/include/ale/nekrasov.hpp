#pragma once

/// @file nekrasov.hpp
/// @brief Flat-space C^2 partition functions: the factorized building block
/// of every ALE partition function. Generic over the exact scalar ring, so
/// the same code runs on rational sample points, on the slope substitution
/// eps1 = x, eps2 = c x (RatFunc), and on jets of either.

#include "ale/jet.hpp"
#include "ale/localization.hpp"

namespace ale {

enum class Matter { pure, adjoint, fundamental };

template <class S>
struct C2Params {
    S e1, e2;
    std::vector<S> a;
    Matter matter = Matter::pure;
    S mu{};              // adjoint mass
    std::vector<S> mus;  // fundamental masses (N <= 2r)
    Rational cutoff;
};

namespace detail {

// m_{Y,Y'}(e1, e2, x) evaluated directly at scalars.
template <class S>
S vertex_pair_value(const Partition& Y, const Partition& Yp, const S& e1, const S& e2, const S& x) {
    S acc = scalar_one_like(e1);
    for (int i = 1; i <= Y.num_columns(); ++i)
        for (int j = 1; j <= Y.col(i); ++j) {
            S f = x - scalar_mul_rat(e1, Rational(leg_in(Yp, i, j))) + scalar_mul_rat(e2, Rational(arm(Y, i, j) + 1));
            acc = acc * f;
        }
    for (int i = 1; i <= Yp.num_columns(); ++i)
        for (int j = 1; j <= Yp.col(i); ++j) {
            S f = x + scalar_mul_rat(e1, Rational(leg_in(Y, i, j) + 1)) - scalar_mul_rat(e2, Rational(arm(Yp, i, j)));
            acc = acc * f;
        }
    return acc;
}

template <class S>
S vertex_fund_value(const Partition& Y, const S& e1, const S& e2, const S& x) {
    S acc = scalar_one_like(e1);
    for (int i = 1; i <= Y.num_columns(); ++i)
        for (int j = 1; j <= Y.col(i); ++j)
            acc = acc * (x - scalar_mul_rat(e1, Rational(i - 1)) - scalar_mul_rat(e2, Rational(j - 1)));
    return acc;
}

// prod_{alpha,beta} m_{Y_alpha, Y_beta}(e1, e2, a_beta - a_alpha + shift).
template <class S>
S tangent_denominator(const std::vector<Partition>& Ys, const S& e1, const S& e2, const std::vector<S>& a,
                      const S& shift) {
    const int r = static_cast<int>(Ys.size());
    S acc = scalar_one_like(e1);
    for (int alpha = 0; alpha < r; ++alpha)
        for (int beta = 0; beta < r; ++beta) {
            S x = a[beta] - a[alpha] + shift;
            acc = acc * vertex_pair_value(Ys[alpha], Ys[beta], e1, e2, x);
        }
    return acc;
}

} // namespace detail

// Weight of one fixed point (Young r-tuple) of the C^2 theory: the matter
// numerator over the tangent Euler denominator. Throws VanishingFactor if a
// denominator factor evaluates to zero at the sample point.
template <class S>
S c2_fixed_point_weight(const C2Params<S>& p, const std::vector<Partition>& Ys) {
    S den = detail::tangent_denominator(Ys, p.e1, p.e2, p.a, S{});
    if (scalar_is_zero(den)) throw VanishingFactor("C^2 tangent denominator");
    S num = scalar_one_like(p.e1);
    switch (p.matter) {
        case Matter::pure:
            break;
        case Matter::adjoint:
            num = detail::tangent_denominator(Ys, p.e1, p.e2, p.a, p.mu);
            break;
        case Matter::fundamental:
            for (const S& mus : p.mus)
                for (size_t alpha = 0; alpha < Ys.size(); ++alpha)
                    num = num * detail::vertex_fund_value(Ys[alpha], p.e1, p.e2, p.a[alpha] + mus);
            break;
    }
    return num * scalar_inverse(den);
}

// Z^{inst}_{C^2}: sum over Young r-tuples, exact series to the cutoff.
template <class S>
GradedSeries<S> z_c2(const C2Params<S>& p) {
    const int r = static_cast<int>(p.a.size());
    if (r < 1) throw ConfigError("rank must be positive");
    if (p.matter == Matter::fundamental && static_cast<int>(p.mus.size()) > 2 * r)
        throw TooManyFlavours(static_cast<int>(p.mus.size()), r);
    GradedSeries<S> out(p.cutoff);
    out.add_term(Rational(0), Rational(0), scalar_one_like(p.e1));
    long nMax = static_cast<long>(ifloor(p.cutoff));
    for (long n = 1; n <= nMax; ++n) {
        S coeff{};
        for (const auto& comp : enumerate_young_tuples(r, static_cast<int>(n)))
            coeff = coeff + c2_fixed_point_weight(p, comp);
        out.add_term(Rational(n), Rational(0), coeff);
    }
    return out;
}

// [ch_{Y^i}]_s of the localized universal-sheaf character at one patch:
// the alternating four-corner box sum divided by e1 e2 (s+2)!, for s >= -1.
// Ys holds the patch-i tableau of each colour; a the (shifted) Coulomb values.
template <class S>
S ch_part(const std::vector<Partition>& Ys, long sdeg, const S& e1, const S& e2, const std::vector<S>& a) {
    if (sdeg < -1) throw IndexOutOfRange("ch_part degree must be >= -1");
    const long p = sdeg + 2;
    auto power = [&](const S& base) {
        S acc = scalar_one_like(e1);
        for (long m = 0; m < p; ++m) acc = acc * base;
        return acc;
    };
    S total{};
    for (size_t alpha = 0; alpha < Ys.size(); ++alpha) {
        total = total + power(a[alpha]);
        for (int i = 1; i <= Ys[alpha].num_columns(); ++i)
            for (int j = 1; j <= Ys[alpha].col(i); ++j) {
                S x = a[alpha] - scalar_mul_rat(e1, Rational(i - 1)) - scalar_mul_rat(e2, Rational(j - 1));
                S corner = power(x) - power(x - e1) - power(x - e2) + power(x - e1 - e2);
                total = total - corner;
            }
    }
    Rational fact(1);
    for (long m = 2; m <= p; ++m) fact *= Rational(m);
    return total * scalar_inverse(e1 * e2) * scalar_mul_rat(scalar_one_like(e1), Rational(1) / fact);
}

// Couplings of the deformed C^2 partition function: jet-valued tau_s for the
// finitely many s that are switched on (tau_s multiplies [ch]_{s-1}).
template <class S>
struct TauCoupling {
    long s;
    Jet<S> value;
};

// Deformed Nekrasov partition function: per fixed point, exp of the
// observable insertion is expanded nilpotently BEFORE the sum.
template <class S>
DeformationJet<S> z_c2_deformed(const C2Params<S>& p, const JetSpecPtr& spec, const std::vector<TauCoupling<S>>& taus) {
    const int r = static_cast<int>(p.a.size());
    const S one = scalar_one_like(p.e1);
    const Jet<S> jetOne(spec, one);
    DeformationJet<S> out(p.cutoff);
    long nMax = static_cast<long>(ifloor(p.cutoff));
    for (long n = 0; n <= nMax; ++n) {
        Jet<S> coeff(spec);
        for (const auto& comp : enumerate_young_tuples(r, static_cast<int>(n))) {
            S weight = c2_fixed_point_weight(p, comp);
            Jet<S> insertion(spec);
            for (const auto& tau : taus)
                insertion += tau.value.scaled(ch_part(comp, tau.s - 1, p.e1, p.e2, p.a));
            coeff += insertion.exp_nilpotent(one).scaled(weight);
        }
        out.add_term(Rational(n), Rational(0), coeff);
    }
    return out;
}

// Plain z_c2 but with integer q-powers additionally weighted by a unit jet
// factor^n (the shifted couplings q e^{c t} of the blowup formulas).
template <class S>
DeformationJet<S> z_c2_jet_coupling(const C2Params<S>& p, const Jet<S>& couplingUnit) {
    GradedSeries<S> plain = z_c2(p);
    DeformationJet<S> out(p.cutoff);
    Jet<S> power(couplingUnit.spec(), scalar_one_like(p.e1));
    long n = 0;
    for (const auto& [e, v] : plain.terms()) {
        long target = rational_to_long(e.q);
        while (n < target) {
            power = power * couplingUnit;
            ++n;
        }
        out.add_term(e.q, e.u, power.scaled(v));
    }
    return out;
}

} // namespace ale
