#pragma once

/// @file localization.hpp
/// @brief Vertex and edge factors, restriction characters, and assembled
/// equivariant Euler classes at fixed points, kept factored so degrees can be
/// counted before anything is multiplied out.

#include <optional>

#include "ale/lattice.hpp"
#include "ale/scalar.hpp"

namespace ale {

// An exact linear form c1*eps1 + c2*eps2 + cmu*mu + sum_i ai*a_i + const.
// The a-coefficient vector length is fixed by the computation context (r, or
// r + r' for bifundamental classes).
struct LinearForm {
    Rational e1, e2, mu, constant;
    std::vector<Rational> a;

    explicit LinearForm(int nA = 0) : a(nA, Rational(0)) {}

    bool is_zero() const;
    LinearForm& operator+=(const LinearForm& o);
    LinearForm& operator-=(const LinearForm& o);
    friend LinearForm operator+(LinearForm x, const LinearForm& y) { return x += y; }
    friend LinearForm operator-(LinearForm x, const LinearForm& y) { return x -= y; }
    LinearForm scaled(const Rational& f) const;

    friend bool operator==(const LinearForm& a, const LinearForm& b);
    friend bool operator<(const LinearForm& a, const LinearForm& b);

    std::string str() const;
};

LinearForm form_eps(const ToricWeight& w, int nA);                       // integer eps combination
LinearForm form_coulomb(int alpha, int nA);                              // a_alpha (0-based)
LinearForm form_coulomb_diff(int beta, int alpha, int nA);               // a_beta - a_alpha
LinearForm form_mu(int nA);

// Multiset of linear forms with signed multiplicities: positive = numerator,
// negative = denominator. Kept sorted and merged, so identical factors cancel
// exactly (the adjoint edge ratio depends on this).
class FactoredClass {
public:
    const std::vector<std::pair<LinearForm, int>>& factors() const { return factors_; }
    bool trivial() const { return factors_.empty(); }
    long net_degree() const;

    void push(const LinearForm& f, int mult);
    FactoredClass& operator*=(const FactoredClass& o);
    friend FactoredClass operator*(FactoredClass a, const FactoredClass& b) { return a *= b; }
    FactoredClass inverse() const;

    std::string str() const;

private:
    std::vector<std::pair<LinearForm, int>> factors_;
};

// Scalar values of the equivariant parameters at which classes are evaluated.
template <class S>
struct EvalPoint {
    S e1, e2, mu;
    std::vector<S> a;
};

template <class S>
S eval_form(const LinearForm& f, const EvalPoint<S>& pt) {
    S acc = scalar_mul_rat(pt.e1, f.e1);
    acc = acc + scalar_mul_rat(pt.e2, f.e2);
    acc = acc + scalar_mul_rat(pt.mu, f.mu);
    if (f.a.size() > pt.a.size()) throw Error("form has more Coulomb coefficients than the evaluation point");
    for (size_t i = 0; i < f.a.size(); ++i) acc = acc + scalar_mul_rat(pt.a[i], f.a[i]);
    acc = acc + scalar_mul_rat(scalar_one_like(pt.e1), f.constant);
    return acc;
}

// Product of factor^multiplicity. A vanishing factor in the denominator (or
// anywhere when `strict`) throws VanishingFactor naming the form; a vanishing
// numerator factor otherwise just makes the value zero.
template <class S>
S eval_class(const FactoredClass& c, const EvalPoint<S>& pt, bool strict = false) {
    S acc = scalar_one_like(pt.e1);
    for (const auto& [form, mult] : c.factors()) {
        S v = eval_form(form, pt);
        if (scalar_is_zero(v)) {
            if (mult < 0 || strict) throw VanishingFactor(form.str());
            return S{};
        }
        S power = mult > 0 ? v : scalar_inverse(v);
        for (int m = 0; m < std::abs(mult); ++m) acc = acc * power;
    }
    return acc;
}

// --- vertex factors -------------------------------------------------------

// m_{Y,Y'}(E1, E2, x): |Y| + |Y'| linear factors, all multiplicity +1.
FactoredClass vertex_pair(const Partition& Y, const Partition& Yp, const LinearForm& E1, const LinearForm& E2,
                          const LinearForm& x);

// m_Y(E1, E2, x) = prod_{s in Y} (x - L'(s) E1 - A'(s) E2).
FactoredClass vertex_fund(const Partition& Y, const LinearForm& E1, const LinearForm& E2, const LinearForm& x);

// --- edge factors ----------------------------------------------------------

// One signed character monomial (chi1^p chi2^q with coefficient +-1).
struct CharMonomial {
    long p, q;
    int coeff;
};

// chi(O_{D_l}(a)) in the chosen equivariant structure:
//   a >= 0: chi1^{floor(a/2)} sum_{j=0..a} chi2^j
//   a <  0: -chi1^{-floor(|a|/2)} sum_{j=1..|a|-1} chi2^{-j}
std::vector<CharMonomial> restriction_character(long a);

// Integer data of an edge: class c, integer vector s = v - C^{-1} e_c, the
// iteration depths d_l with whether the stopping quadratic had a root, and
// the last active divisor index m.
struct EdgeAnalysis {
    int c = 0;
    std::vector<long> s;
    std::vector<long> d;
    std::vector<char> hasRoot;
    int m = 0;
};

EdgeAnalysis analyze_edge(const CartanData& cd, const SectorVector& vDiff);

// ell^{(n)}_{vDiff}(eps^{(n)}, base): the paper's general algorithm (iterative
// procedure + restriction characters). nA sizes the form context; base is the
// a_{beta alpha} form (plus any mass shift).
FactoredClass edge_factor(const CartanData& cd, const SectorVector& vDiff, int n, const LinearForm& base);
FactoredClass edge_factor_all(const CartanData& cd, const SectorVector& vDiff, const LinearForm& base);

// Closed forms, used only as oracles against edge_factor.
FactoredClass edge_factor_closed_k2(const Rational& v, const LinearForm& base);
FactoredClass edge_factor_closed_k3(const CartanData& cd, const SectorVector& vDiff, int n, const LinearForm& base);

// --- assembled Euler classes ------------------------------------------------

// Tangent bundle Euler class at a fixed point; muCoeff = 1 produces the
// adjoint-mass-shifted class (every base gets + mu).
FactoredClass euler_tangent(const CartanData& cd, const Holonomy& hol, const FixedPointDatum& d,
                            const Rational& muCoeff = Rational(0));

// Natural-bundle Euler class at a fixed point; muCoeff = 1 gives the
// fundamental-mass-shifted version (a_alpha + mu).
FactoredClass euler_natural(const CartanData& cd, const Holonomy& hol, const FixedPointDatum& d,
                            const Rational& muCoeff = Rational(0));

// Carlsson-Okounkov bifundamental class on a pair of data; Coulomb context is
// a_1..a_r, a'_1..a'_{r'} and base forms are a'_beta - a_alpha + muCoeff*mu.
FactoredClass euler_bifundamental(const CartanData& cd, const Holonomy& hol1, const FixedPointDatum& d1,
                                  const Holonomy& hol2, const FixedPointDatum& d2,
                                  const Rational& muCoeff = Rational(0));

} // namespace ale
