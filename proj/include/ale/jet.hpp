#pragma once

/// @file jet.hpp
/// @brief Truncated polynomials in named nilpotent deformation symbols
/// (t, tau_s, t_s^{(i)}, ...) over an exact scalar ring.
///
/// A jet with a null variable spec is a plain scalar and promotes silently;
/// jets over different non-equal specs do not mix (MixedFieldError). The
/// total-degree cutoff makes every symbol nilpotent, so exp of a jet with
/// nilpotent constant part is a finite sum. DeformationJet<S> (a graded
/// series with jet coefficients) is the shape in which deformed partition
/// functions are returned; jet_component extracts the series multiplying a
/// given symbol monomial.

#include <algorithm>
#include <memory>
#include <numeric>
#include <vector>

#include "ale/series.hpp"

namespace ale {

struct JetSpec {
    std::vector<std::string> symbols;
    int maxDegree = 2;
    friend bool operator==(const JetSpec& a, const JetSpec& b) {
        return a.maxDegree == b.maxDegree && a.symbols == b.symbols;
    }
    int index_of(const std::string& name) const {
        auto it = std::find(symbols.begin(), symbols.end(), name);
        if (it == symbols.end()) throw IndexOutOfRange("jet symbol '" + name + "'");
        return static_cast<int>(it - symbols.begin());
    }
};

using JetSpecPtr = std::shared_ptr<const JetSpec>;

inline JetSpecPtr make_jet_spec(std::vector<std::string> symbols, int maxDegree) {
    return std::make_shared<const JetSpec>(JetSpec{std::move(symbols), maxDegree});
}

template <class S>
class Jet {
public:
    using Exp = std::vector<int>;
    using TermMap = std::map<Exp, S>;

    Jet() = default; // zero, spec-free
    explicit Jet(JetSpecPtr spec) : spec_(std::move(spec)) {}
    Jet(JetSpecPtr spec, const S& constant) : spec_(std::move(spec)) {
        add_term(zero_exp(), constant);
    }
    static Jet from_scalar(const S& v) {
        Jet j;
        j.add_term({}, v);
        return j;
    }
    static Jet symbol(const JetSpecPtr& spec, const std::string& name, const S& coeff) {
        Jet j(spec);
        Exp e(spec->symbols.size(), 0);
        e[spec->index_of(name)] = 1;
        j.add_term(e, coeff);
        return j;
    }

    const JetSpecPtr& spec() const { return spec_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Exp zero_exp() const { return Exp(spec_ ? spec_->symbols.size() : 0, 0); }

    void add_term(const Exp& e, const S& v) {
        if (scalar_is_zero(v)) return;
        int deg = std::accumulate(e.begin(), e.end(), 0);
        if (spec_ && deg > spec_->maxDegree) return;
        if (!spec_ && deg > 0) throw Error("jet term with symbols but no spec");
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, v);
        } else {
            it->second = it->second + v;
            if (scalar_is_zero(it->second)) terms_.erase(it);
        }
    }

    S constant_part() const {
        auto it = terms_.find(zero_exp());
        return it == terms_.end() ? S{} : it->second;
    }

    friend bool operator==(const Jet& a, const Jet& b) {
        if (!compatible(a.spec_, b.spec_)) return false;
        auto [pa, pb] = aligned(a, b);
        return pa.terms_ == pb.terms_;
    }
    friend bool operator!=(const Jet& a, const Jet& b) { return !(a == b); }

    Jet operator-() const {
        Jet r(spec_);
        for (const auto& [e, v] : terms_) r.terms_.emplace(e, -v);
        return r;
    }

    friend Jet operator+(const Jet& a, const Jet& b) { return combined(a, b, false); }
    friend Jet operator-(const Jet& a, const Jet& b) { return combined(a, b, true); }
    friend Jet operator*(const Jet& a, const Jet& b) {
        auto [pa, pb] = aligned(a, b);
        Jet r(pa.spec_);
        for (const auto& [ea, va] : pa.terms_)
            for (const auto& [eb, vb] : pb.terms_) {
                Exp e = ea;
                for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, va * vb);
            }
        return r;
    }
    Jet& operator+=(const Jet& o) { return *this = *this + o; }
    Jet& operator-=(const Jet& o) { return *this = *this - o; }
    Jet& operator*=(const Jet& o) { return *this = *this * o; }

    Jet scaled(const S& f) const {
        Jet r(spec_);
        for (const auto& [e, v] : terms_) r.add_term(e, v * f);
        return r;
    }
    Jet scaled_rat(const Rational& f) const {
        Jet r(spec_);
        if (f == 0) return r;
        for (const auto& [e, v] : terms_) r.add_term(e, scalar_mul_rat(v, f));
        return r;
    }

    // Nilpotent part (constant term removed).
    Jet nilpotent_part() const {
        Jet r = *this;
        r.terms_.erase(r.zero_exp());
        return r;
    }

    Jet inverse() const {
        S c0 = constant_part();
        if (!scalar_is_invertible(c0)) throw DivisionByZero("jet with non-invertible constant part");
        S c0inv = scalar_inverse(c0);
        Jet n = nilpotent_part().scaled(c0inv); // J = c0 (1 + n)
        Jet acc = Jet(spec_, scalar_one_like(c0));
        Jet power = n;
        for (int m = 1; !power.is_zero(); ++m) {
            acc = (m % 2 == 1) ? acc - power : acc + power;
            power = power * n;
        }
        return acc.scaled(c0inv);
    }

    friend Jet operator/(const Jet& a, const Jet& b) { return a * b.inverse(); }
    Jet& operator/=(const Jet& o) { return *this = *this / o; }

    // exp for jets with nilpotent constant part: a finite sum.
    Jet exp_nilpotent(const S& one) const {
        if (!scalar_is_nilpotent(constant_part()))
            throw NonUnitConstantTerm("jet exp of non-nilpotent constant part");
        Jet acc = Jet(spec_, one);
        Jet power = *this;
        Rational factorial(1);
        for (long m = 1; !power.is_zero(); ++m) {
            factorial *= Rational(m);
            acc += power.scaled_rat(Rational(1) / factorial);
            power = power * *this;
            if (m > 10000) throw Error("jet exp failed to terminate");
        }
        return acc;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, v] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + scalar_str(v) + ")";
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                out += "*" + spec_->symbols[i];
                if (e[i] > 1) out += "^" + std::to_string(e[i]);
            }
        }
        return out;
    }

    static bool compatible(const JetSpecPtr& a, const JetSpecPtr& b) {
        if (!a || !b || a == b) return true;
        return *a == *b;
    }

private:
    static std::pair<Jet, Jet> aligned(const Jet& a, const Jet& b) {
        if (!compatible(a.spec_, b.spec_)) throw MixedFieldError("jet variable specs differ");
        if (a.spec_ && !b.spec_) return {a, b.promoted(a.spec_)};
        if (!a.spec_ && b.spec_) return {a.promoted(b.spec_), b};
        return {a, b};
    }
    Jet promoted(const JetSpecPtr& spec) const {
        Jet r(spec);
        for (const auto& [e, v] : terms_) r.add_term(r.zero_exp(), v);
        return r;
    }
    static Jet combined(const Jet& a, const Jet& b, bool subtract) {
        auto [pa, pb] = aligned(a, b);
        Jet r = pa;
        for (const auto& [e, v] : pb.terms_) r.add_term(e, subtract ? -v : v);
        return r;
    }

    JetSpecPtr spec_;
    TermMap terms_;
};

template <class S>
bool scalar_is_zero(const Jet<S>& v) {
    return v.is_zero();
}
template <class S>
Jet<S> scalar_one_like(const Jet<S>& v) {
    S model = v.terms().empty() ? S{} : v.terms().begin()->second;
    return Jet<S>(v.spec(), scalar_one_like(model));
}
template <class S>
bool scalar_is_nilpotent(const Jet<S>& v) {
    return scalar_is_nilpotent(v.constant_part());
}
template <class S>
bool scalar_is_invertible(const Jet<S>& v) {
    return scalar_is_invertible(v.constant_part());
}
template <class S>
Jet<S> scalar_inverse(const Jet<S>& v) {
    return v.inverse();
}
template <class S>
Jet<S> scalar_mul_rat(const Jet<S>& v, const Rational& r) {
    return v.scaled_rat(r);
}
template <class S>
std::string scalar_str(const Jet<S>& v) {
    return v.str();
}

// Deformed partition functions: graded q-series whose coefficients are jets
// in the deformation symbols, all exponents truncated.
template <class S>
using DeformationJet = GradedSeries<Jet<S>>;

// The plain series multiplying a given symbol monomial.
template <class S>
GradedSeries<S> jet_component(const DeformationJet<S>& dj, const std::vector<int>& jexp) {
    GradedSeries<S> out(dj.cutoff());
    for (const auto& [e, v] : dj.terms()) {
        auto it = v.terms().find(jexp);
        if (it != v.terms().end()) out.add_term(e.q, e.u, it->second);
    }
    return out;
}

} // namespace ale
