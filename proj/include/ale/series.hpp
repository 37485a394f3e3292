#pragma once

/// @file series.hpp
/// @brief Truncated graded series in q (and optionally u = e^{tau_1}) with
/// exact rational exponents and exact scalar coefficients.
///
/// Truncation drops terms with q-exponent above the cutoff and is a ring
/// congruence: truncate(a*b) = truncate(truncate(a)*truncate(b)). Zero
/// coefficients are removed eagerly so structural equality is mathematical
/// equality at fixed cutoff. The u-grading carries no cutoff (only finitely
/// many u-exponents ever appear).

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "ale/scalar.hpp"

namespace ale {

struct SeriesExp {
    Rational q;
    Rational u;
    friend bool operator==(const SeriesExp& a, const SeriesExp& b) { return a.q == b.q && a.u == b.u; }
    friend bool operator<(const SeriesExp& a, const SeriesExp& b) {
        if (a.q != b.q) return a.q < b.q;
        return a.u < b.u;
    }
};

template <class S>
class GradedSeries {
public:
    using TermMap = std::map<SeriesExp, S>;

    explicit GradedSeries(Rational cutoff) : cutoff_(std::move(cutoff)) {}

    static GradedSeries zero(Rational cutoff) { return GradedSeries(std::move(cutoff)); }
    static GradedSeries constant(S value, Rational cutoff) {
        GradedSeries s(std::move(cutoff));
        s.add_term(Rational(0), Rational(0), std::move(value));
        return s;
    }
    static GradedSeries monomial(S value, Rational eq, Rational eu, Rational cutoff) {
        GradedSeries s(std::move(cutoff));
        s.add_term(std::move(eq), std::move(eu), std::move(value));
        return s;
    }

    const Rational& cutoff() const { return cutoff_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add_term(Rational eq, Rational eu, S value) {
        if (eq > cutoff_ || scalar_is_zero(value)) return;
        SeriesExp e{std::move(eq), std::move(eu)};
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), std::move(value));
        } else {
            it->second = it->second + value;
            if (scalar_is_zero(it->second)) terms_.erase(it);
        }
    }

    const S* find_term(const Rational& eq, const Rational& eu = Rational(0)) const {
        auto it = terms_.find(SeriesExp{eq, eu});
        return it == terms_.end() ? nullptr : &it->second;
    }
    // Requires the default-constructed S to be zero.
    S coefficient(const Rational& eq, const Rational& eu = Rational(0)) const {
        const S* p = find_term(eq, eu);
        return p ? *p : S{};
    }
    const SeriesExp* min_exponent() const { return terms_.empty() ? nullptr : &terms_.begin()->first; }

    friend bool operator==(const GradedSeries& a, const GradedSeries& b) {
        return a.cutoff_ == b.cutoff_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const GradedSeries& a, const GradedSeries& b) { return !(a == b); }

    GradedSeries operator-() const {
        GradedSeries r(cutoff_);
        for (const auto& [e, v] : terms_) r.terms_.emplace(e, -v);
        return r;
    }

    friend GradedSeries operator+(const GradedSeries& a, const GradedSeries& b) {
        a.check_cutoff(b);
        GradedSeries r = a;
        for (const auto& [e, v] : b.terms_) r.add_term(e.q, e.u, v);
        return r;
    }
    friend GradedSeries operator-(const GradedSeries& a, const GradedSeries& b) {
        a.check_cutoff(b);
        GradedSeries r = a;
        for (const auto& [e, v] : b.terms_) r.add_term(e.q, e.u, -v);
        return r;
    }
    friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
        a.check_cutoff(b);
        GradedSeries r(a.cutoff_);
        for (const auto& [ea, va] : a.terms_) {
            for (const auto& [eb, vb] : b.terms_) {
                Rational eq = ea.q + eb.q;
                if (eq > a.cutoff_) break; // ordered by (q,u): all later terms overflow too
                r.add_term(eq, ea.u + eb.u, va * vb);
            }
        }
        return r;
    }
    GradedSeries& operator+=(const GradedSeries& o) { return *this = *this + o; }
    GradedSeries& operator-=(const GradedSeries& o) { return *this = *this - o; }
    GradedSeries& operator*=(const GradedSeries& o) { return *this = *this * o; }

    GradedSeries scaled(const S& f) const {
        GradedSeries r(cutoff_);
        for (const auto& [e, v] : terms_) r.add_term(e.q, e.u, v * f);
        return r;
    }
    GradedSeries scaled_rat(const Rational& f) const {
        GradedSeries r(cutoff_);
        if (f == 0) return r;
        for (const auto& [e, v] : terms_) r.add_term(e.q, e.u, scalar_mul_rat(v, f));
        return r;
    }

    // Multiply by the monomial q^{dq} u^{du}; the cutoff shifts along so no
    // information is created or destroyed.
    GradedSeries shifted(const Rational& dq, const Rational& du = Rational(0)) const {
        GradedSeries r(cutoff_ + dq);
        for (const auto& [e, v] : terms_) r.terms_.emplace(SeriesExp{e.q + dq, e.u + du}, v);
        return r;
    }

    GradedSeries truncated(const Rational& newCutoff) const {
        GradedSeries r(newCutoff);
        for (const auto& [e, v] : terms_) {
            if (e.q > newCutoff) break;
            r.terms_.emplace(e, v);
        }
        return r;
    }

    // Collapse the u-grading at u = 1 (sum coefficients over u-exponents).
    GradedSeries u_collapsed() const {
        GradedSeries r(cutoff_);
        for (const auto& [e, v] : terms_) r.add_term(e.q, Rational(0), v);
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, v] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << scalar_str(v) << ")";
            if (e.q != 0) os << "*q^(" << to_string(e.q) << ")";
            if (e.u != 0) os << "*u^(" << to_string(e.u) << ")";
        }
        return os.str();
    }

private:
    void check_cutoff(const GradedSeries& o) const {
        if (cutoff_ != o.cutoff_)
            throw CutoffMismatch(to_string(cutoff_) + " vs " + to_string(o.cutoff_));
    }

    TermMap terms_;
    Rational cutoff_;
};

namespace detail {

// exp/log/geometric loops terminate iff every term either carries a strictly
// positive q-exponent (killed by truncation) or a nilpotent coefficient
// (killed by the jet degree bound).
template <class S>
void require_topologically_small(const GradedSeries<S>& s, const char* who) {
    for (const auto& [e, v] : s.terms()) {
        if (e.q > 0) break;
        if (!scalar_is_nilpotent(v))
            throw NonUnitConstantTerm(std::string(who) + ": term q^" + to_string(e.q) + " u^" + to_string(e.u) +
                                      " has non-nilpotent coefficient");
    }
}

} // namespace detail

// exp(s); the caller supplies the multiplicative unit of the coefficient ring
// so that exp(0) = 1 is well defined in every instantiation.
template <class S>
GradedSeries<S> series_exp(const GradedSeries<S>& s, const S& one) {
    detail::require_topologically_small(s, "series_exp");
    GradedSeries<S> acc = GradedSeries<S>::constant(one, s.cutoff());
    GradedSeries<S> power = s;
    Rational factorial(1);
    for (long m = 1; !power.is_zero(); ++m) {
        factorial *= Rational(m);
        acc += power.scaled_rat(Rational(1) / factorial);
        power = power * s;
        if (m > 100000) throw Error("series_exp failed to terminate");
    }
    return acc;
}

template <class S>
GradedSeries<S> series_exp(const GradedSeries<S>& s) {
    const S one = s.is_zero() ? scalar_one_like(S{}) : scalar_one_like(s.terms().begin()->second);
    return series_exp(s, one);
}

// log(s) for s = 1 + h; inverse of series_exp up to the cutoff.
template <class S>
GradedSeries<S> series_log1p(const GradedSeries<S>& s) {
    if (s.is_zero()) throw NonUnitConstantTerm("series_log1p: zero series");
    const S one = scalar_one_like(s.terms().begin()->second);
    GradedSeries<S> h = s;
    h.add_term(Rational(0), Rational(0), -one);
    detail::require_topologically_small(h, "series_log1p");
    GradedSeries<S> acc(s.cutoff());
    GradedSeries<S> power = h;
    for (long m = 1; !power.is_zero(); ++m) {
        Rational c = Rational((m % 2 == 1) ? 1 : -1) / Rational(m);
        acc += power.scaled_rat(c);
        power = power * h;
        if (m > 100000) throw Error("series_log1p failed to terminate");
    }
    return acc;
}

// a / b. The leading (smallest-exponent) coefficient of b must be invertible
// and the rest of b topologically small after normalization. Result cutoff is
// a.cutoff() - qexp(lead(b)).
template <class S>
GradedSeries<S> series_div(const GradedSeries<S>& a, const GradedSeries<S>& b) {
    if (b.is_zero()) throw DivisionByZero("series division");
    if (a.cutoff() != b.cutoff())
        throw CutoffMismatch("series_div: " + to_string(a.cutoff()) + " vs " + to_string(b.cutoff()));
    const auto& lead = *b.terms().begin();
    const SeriesExp le = lead.first;
    if (!scalar_is_invertible(lead.second))
        throw DivisionByZero("series division: non-invertible leading coefficient " + scalar_str(lead.second));
    const S inv = scalar_inverse(lead.second);
    const S one = scalar_one_like(lead.second);
    GradedSeries<S> h = b.shifted(-le.q, -le.u).truncated(b.cutoff() - le.q).scaled(inv);
    h.add_term(Rational(0), Rational(0), -one);
    detail::require_topologically_small(h, "series_div");
    GradedSeries<S> an = a.shifted(-le.q, -le.u).truncated(a.cutoff() - le.q).scaled(inv);
    GradedSeries<S> acc = an;
    GradedSeries<S> power = an;
    for (long m = 1;; ++m) {
        power = power * h;
        if (power.is_zero()) break;
        acc += (m % 2 == 1) ? -power : power;
        if (m > 100000) throw Error("series_div failed to terminate");
    }
    return acc;
}

} // namespace ale
