#pragma once

/// @file ale_theory.hpp
/// @brief Assembly of the X_k partition functions from sectors, edge factors
/// and C^2 blocks.
///
/// Sectors are never collapsed against numeric chemical potentials inside the
/// library: every generating function is returned per sector (SectorSeries),
/// keyed by the fractional first-Chern vector v. The q-weight q^{(1/2r) v.Cv}
/// of a sector is part of its series. Matter enters through the edge-factor
/// ratio (adjoint), the natural-bundle edge numerator (fundamental), and the
/// corresponding C^2 blocks.

#include <map>
#include <optional>

#include "ale/nekrasov.hpp"
#include "ale/parallel.hpp"

namespace ale {

struct SectorKeyLess {
    bool operator()(const SectorVector& a, const SectorVector& b) const {
        for (int i = 0; i < a.size() && i < b.size(); ++i)
            if (a(i) != b(i)) return a(i) < b(i);
        return a.size() < b.size();
    }
};

template <class S>
using SectorSeries = std::map<SectorVector, GradedSeries<S>, SectorKeyLess>;

template <class S>
struct AleParams {
    CartanData cd;
    Holonomy hol;
    S e1, e2;
    std::vector<S> a;
    Matter matter = Matter::pure;
    S mu{};
    std::vector<S> mus;
    Rational cutoff;
    std::optional<Rational> sectorBound; // default: cutoff
    int workers = 1;

    Rational sector_bound() const { return sectorBound ? *sectorBound : cutoff; }
};

namespace detail {

template <class S>
EvalPoint<S> base_point(const AleParams<S>& p) {
    return EvalPoint<S>{p.e1, p.e2, p.mu, p.a};
}

// eps_j^{(i)} evaluated at the sample point.
template <class S>
std::pair<S, S> patch_eps(const AleParams<S>& p, int i) {
    auto [w1, w2] = toric_weights(p.cd.k, i);
    S e1i = scalar_mul_rat(p.e1, Rational(w1.ce1)) + scalar_mul_rat(p.e2, Rational(w1.ce2));
    S e2i = scalar_mul_rat(p.e1, Rational(w2.ce1)) + scalar_mul_rat(p.e2, Rational(w2.ce2));
    return {e1i, e2i};
}

// a^{(i)} for one split: a_alpha - (v_alpha)_i eps1^{(i)} - (v_alpha)_{i-1} eps2^{(i)}.
template <class S>
std::vector<S> patch_coulomb(const AleParams<S>& p, const std::vector<SectorVector>& vs, int i, const S& e1i,
                             const S& e2i) {
    std::vector<S> out;
    out.reserve(vs.size());
    for (std::size_t alpha = 0; alpha < vs.size(); ++alpha) {
        auto [m1, m2] = coulomb_shift(p.cd, vs[alpha], i);
        out.push_back(p.a[alpha] - scalar_mul_rat(e1i, m1) - scalar_mul_rat(e2i, m2));
    }
    return out;
}

// Edge-factor ratio of one split, with exact cancellation of identical forms
// before evaluation (adjoint), per the matter content.
template <class S>
S split_edge_factor(const AleParams<S>& p, const SectorSplit& split) {
    const int r = p.hol.r;
    EvalPoint<S> pt = base_point(p);
    FactoredClass total;
    for (int alpha = 0; alpha < r; ++alpha)
        for (int beta = 0; beta < r; ++beta) {
            SectorVector vDiff = split.v[beta] - split.v[alpha];
            LinearForm base = form_coulomb_diff(beta, alpha, r);
            FactoredClass den = edge_factor_all(p.cd, vDiff, base);
            total *= den.inverse();
            if (p.matter == Matter::adjoint) {
                LinearForm baseMu = base;
                baseMu.mu = Rational(1);
                total *= edge_factor_all(p.cd, vDiff, baseMu);
            }
        }
    S value = eval_class(total, pt);
    if (p.matter == Matter::fundamental) {
        for (const S& mass : p.mus) {
            EvalPoint<S> ptm = pt;
            ptm.mu = mass;
            for (int alpha = 0; alpha < r; ++alpha) {
                LinearForm base = form_coulomb(alpha, r);
                base.mu = Rational(1);
                value = value * eval_class(edge_factor_all(p.cd, split.v[alpha], base), ptm);
            }
        }
    }
    return value;
}

template <class S>
C2Params<S> patch_c2_params(const AleParams<S>& p, const SectorSplit& split, int i, const Rational& blockCutoff) {
    auto [e1i, e2i] = patch_eps(p, i);
    C2Params<S> cp;
    cp.e1 = e1i;
    cp.e2 = e2i;
    cp.a = patch_coulomb(p, split.v, i, e1i, e2i);
    cp.matter = p.matter;
    cp.mu = p.mu;
    cp.mus = p.mus;
    cp.cutoff = blockCutoff;
    return cp;
}

} // namespace detail

// One split's contribution: q^{e0} * edge ratio * prod_i Z_{C^2}^{(i)}.
template <class S>
GradedSeries<S> z_ale_split(const AleParams<S>& p, const SectorSplit& split) {
    Rational blockCutoff = p.cutoff - split.baseExponent;
    S factor = detail::split_edge_factor(p, split);
    GradedSeries<S> blocks = GradedSeries<S>::constant(scalar_one_like(p.e1), blockCutoff);
    for (int i = 1; i <= p.cd.k; ++i) blocks *= z_c2(detail::patch_c2_params(p, split, i, blockCutoff));
    return blocks.scaled(factor).shifted(split.baseExponent);
}

// Instanton partition function of one topological sector.
template <class S>
GradedSeries<S> z_ale_sector(const AleParams<S>& p, const SectorVector& v) {
    if (p.matter == Matter::fundamental) {
        if (static_cast<int>(p.mus.size()) > 2 * p.hol.r)
            throw TooManyFlavours(static_cast<int>(p.mus.size()), p.hol.r);
        auto gate = fundamental_gate(p.cd, p.hol, v, static_cast<int>(p.mus.size()));
        if (gate.status == FundamentalStatus::excluded)
            throw SectorExcluded("sector " + sector_str(v) + " has d_w(v) = " + to_string(gate.d) + " < 0");
    }
    GradedSeries<S> out(p.cutoff);
    for (const auto& split : enumerate_sector_splits(p.cd, p.hol, v, p.cutoff))
        out += z_ale_split(p, split);
    return out;
}

// Direct localization route for the same sector: explicit fixed-point data
// and assembled Euler classes. Slower; used as an independent cross-check of
// the factorized route.
template <class S>
GradedSeries<S> z_ale_sector_direct(const AleParams<S>& p, const SectorVector& v) {
    GradedSeries<S> out(p.cutoff);
    EvalPoint<S> pt = detail::base_point(p);
    for (const auto& d : enumerate_sector_data(p.cd, p.hol, v, p.cutoff)) {
        S weight = eval_class(euler_tangent(p.cd, p.hol, d).inverse(), pt);
        if (p.matter == Matter::adjoint)
            weight = weight * eval_class(euler_tangent(p.cd, p.hol, d, Rational(1)), pt);
        if (p.matter == Matter::fundamental)
            for (const S& mass : p.mus) {
                EvalPoint<S> ptm = pt;
                ptm.mu = mass;
                weight = weight * eval_class(euler_natural(p.cd, p.hol, d, Rational(1)), ptm);
            }
        out.add_term(d.qExponent, Rational(0), weight);
    }
    return out;
}

template <class S>
struct ZAleResult {
    SectorSeries<S> sectors;
    // Minimal q-exponent of the nearest sector beyond the bound (reported so
    // callers can see what the sector cut dropped).
    std::optional<Rational> firstDroppedExponent;
};

// All sectors whose minimal possible exponent (1/2r) v.Cv is within the
// sector bound; empty sector series are kept out.
template <class S>
ZAleResult<S> z_ale(const AleParams<S>& p) {
    ZAleResult<S> res;
    auto sectors = enumerate_sectors(p.cd, p.hol, p.sector_bound());
    if (p.matter == Matter::fundamental) {
        std::vector<SectorVector> kept;
        for (const auto& v : sectors)
            if (fundamental_gate(p.cd, p.hol, v, static_cast<int>(p.mus.size())).status !=
                FundamentalStatus::excluded)
                kept.push_back(v);
        sectors = std::move(kept);
    }
    std::vector<GradedSeries<S>> results(sectors.size(), GradedSeries<S>(p.cutoff));
    parallel_for(sectors.size(), p.workers, [&](std::size_t i) { results[i] = z_ale_sector(p, sectors[i]); });
    for (std::size_t i = 0; i < sectors.size(); ++i)
        if (!results[i].is_zero()) res.sectors.emplace(sectors[i], std::move(results[i]));

    // smallest sector exponent beyond the bound
    Rational widened = p.sector_bound() + Rational(2);
    std::optional<Rational> dropped;
    for (const auto& v : enumerate_sectors(p.cd, p.hol, widened)) {
        Rational e = quad_form(p.cd, v) / Rational(2 * p.hol.r);
        if (e > p.sector_bound() && (!dropped || e < *dropped)) dropped = e;
    }
    res.firstDroppedExponent = dropped;
    return res;
}

// Vafa-Witten counting series: the mu -> 0 adjoint limit, per sector, by
// direct fixed-point counting. Coefficients are nonnegative integers.
SectorSeries<Rational> inline z_vw(const CartanData& cd, const Holonomy& hol, const Rational& cutoff) {
    SectorSeries<Rational> out;
    for (const auto& v : enumerate_sectors(cd, hol, cutoff)) {
        GradedSeries<Rational> s(cutoff);
        for (const auto& d : enumerate_sector_data(cd, hol, v, cutoff))
            s.add_term(d.qExponent, Rational(0), Rational(1));
        if (!s.is_zero()) out.emplace(v, std::move(s));
    }
    return out;
}

// The bare lattice part sum_{splits} q^{(1/2) sum v_a.Cv_a} of one sector
// (z_vw with the eta^{-rk} tableau dressing stripped).
GradedSeries<Rational> inline z_vw_lattice_part(const CartanData& cd, const Holonomy& hol, const SectorVector& v,
                                                const Rational& cutoff) {
    GradedSeries<Rational> s(cutoff);
    for (const auto& split : enumerate_sector_splits(cd, hol, v, cutoff))
        s.add_term(split.baseExponent, Rational(0), Rational(1));
    return s;
}

// Quadratic 0-observable generating function in the (q_eff, u) grading,
// u = e^{tau_1}: each split carries u^{(1/2) sum_{a != b} v_a.Cv_b}; at u = 1
// it collapses to z_ale.
template <class S>
SectorSeries<S> z_circ(const AleParams<S>& p) {
    SectorSeries<S> out;
    for (const auto& v : enumerate_sectors(p.cd, p.hol, p.sector_bound())) {
        GradedSeries<S> acc(p.cutoff);
        for (const auto& split : enumerate_sector_splits(p.cd, p.hol, v, p.cutoff)) {
            Rational eu = quad_form(p.cd, v) / 2 - split.baseExponent;
            acc += z_ale_split(p, split).shifted(Rational(0), eu).truncated(p.cutoff);
        }
        if (!acc.is_zero()) out.emplace(v, std::move(acc));
    }
    return out;
}

// Correlators of quadratic 2-observables for k = 2, t-jet truncated:
// (q e^{2t(e1+e2)})^{sum v_a^2} e^{-2t sum v_a a_a} / prod ell *
// Z_{C^2}(2e1, e2-e1, a - 2e1 v; q e^{2 e1 t}) Z_{C^2}(e1-e2, 2e2, a - 2e2 v; q e^{2 e2 t}).
template <class S>
SectorSeries<Jet<S>> z_bullet_k2(const AleParams<S>& p, const JetSpecPtr& spec, const std::string& tname) {
    if (p.cd.k != 2) throw KNotTwo(p.cd.k);
    const S one = scalar_one_like(p.e1);
    const Jet<S> t = Jet<S>::symbol(spec, tname, one);
    SectorSeries<Jet<S>> out;
    for (const auto& v : enumerate_sectors(p.cd, p.hol, p.sector_bound())) {
        DeformationJet<S> acc(p.cutoff);
        for (const auto& split : enumerate_sector_splits(p.cd, p.hol, v, p.cutoff)) {
            Rational blockCutoff = p.cutoff - split.baseExponent;
            S edge = detail::split_edge_factor(p, split);

            // e^{2t(e1+e2) sum v^2 - 2t sum v_a a_a}
            S lin{};
            Rational sumsq(0);
            for (int alpha = 0; alpha < p.hol.r; ++alpha) {
                lin = lin - scalar_mul_rat(p.a[alpha] * one, Rational(2) * split.v[alpha](0));
                sumsq += split.v[alpha](0) * split.v[alpha](0);
            }
            lin = lin + scalar_mul_rat((p.e1 + p.e2) * one, Rational(2) * sumsq);
            Jet<S> prefactor = t.scaled(lin).exp_nilpotent(one).scaled(edge);

            DeformationJet<S> blocks = DeformationJet<S>::constant(Jet<S>(spec, one), blockCutoff);
            for (int i = 1; i <= 2; ++i) {
                C2Params<S> cp = detail::patch_c2_params(p, split, i, blockCutoff);
                // coupling q e^{2 eps_i t}: eps_1 at patch 1, eps_2 at patch 2
                S epsi = (i == 1) ? p.e1 : p.e2;
                Jet<S> unit = t.scaled(scalar_mul_rat(epsi * one, Rational(2))).exp_nilpotent(one);
                blocks *= z_c2_jet_coupling(cp, unit);
            }
            acc += blocks.scaled(prefactor).shifted(split.baseExponent);
        }
        if (!acc.is_zero()) out.emplace(v, std::move(acc));
    }
    return out;
}

// Divisor couplings t_s^{(i)} of the general-k deformed sector function.
template <class S>
struct TDivCoupling {
    int i; // divisor index 1..k-1
    long s;
    Jet<S> value;
};

// Full general-k deformed sector generating function via direct localization
// (the per-datum insertion mixes patches for k >= 3, so no block
// factorization is used here).
template <class S>
DeformationJet<S> z_deformed_sector(const AleParams<S>& p, const SectorVector& v, const JetSpecPtr& spec,
                                    const std::vector<TauCoupling<S>>& taus,
                                    const std::vector<TDivCoupling<S>>& tdivs) {
    const int k = p.cd.k;
    const int r = p.hol.r;
    const S one = scalar_one_like(p.e1);
    EvalPoint<S> pt = detail::base_point(p);
    DeformationJet<S> out(p.cutoff);

    // coupling_l(s) = t_s^{(l)} eps1^{(l)} + t_s^{(l-1)} eps2^{(l)} + tau_s
    auto tdiv = [&](int i, long s) -> Jet<S> {
        for (const auto& c : tdivs)
            if (c.i == i && c.s == s) return c.value;
        return Jet<S>(spec);
    };
    auto tau = [&](long s) -> Jet<S> {
        for (const auto& c : taus)
            if (c.s == s) return c.value;
        return Jet<S>(spec);
    };
    std::vector<long> svals;
    for (const auto& c : taus) svals.push_back(c.s);
    for (const auto& c : tdivs) svals.push_back(c.s);
    std::sort(svals.begin(), svals.end());
    svals.erase(std::unique(svals.begin(), svals.end()), svals.end());

    for (const auto& d : enumerate_sector_data(p.cd, p.hol, v, p.cutoff)) {
        S weight = eval_class(euler_tangent(p.cd, p.hol, d).inverse(), pt);
        if (p.matter == Matter::adjoint)
            weight = weight * eval_class(euler_tangent(p.cd, p.hol, d, Rational(1)), pt);

        Jet<S> insertion(spec);
        for (int l = 1; l <= k; ++l) {
            auto [e1l, e2l] = detail::patch_eps(p, l);
            std::vector<Partition> patch(r);
            for (int alpha = 0; alpha < r; ++alpha) patch[alpha] = d.tuples[alpha][l - 1];
            std::vector<S> al = detail::patch_coulomb(p, d.v, l, e1l, e2l);
            for (long s : svals) {
                Jet<S> coupling = tau(s);
                if (l <= k - 1) coupling += tdiv(l, s).scaled(e1l);
                if (l >= 2) coupling += tdiv(l - 1, s).scaled(e2l);
                if (!coupling.is_zero()) insertion += coupling.scaled(ch_part(patch, s - 1, e1l, e2l, al));

                // cross-divisor terms of the second exponential
                Jet<S> far(spec);
                for (const auto& c : tdivs)
                    if (c.s == s && (c.i <= l - 2 || c.i >= l + 1)) far += c.value;
                if (!far.is_zero()) insertion += far.scaled(ch_part(patch, s, e1l, e2l, al));

                if (l >= 2 && l <= k - 1) {
                    // shifted-argument divisor terms, with the (eps)^{delta}
                    // degree shift folded into the ch index
                    SectorVector vl(r), vlm1(r);
                    std::vector<S> shiftE2(r), shiftE1(r);
                    for (int alpha = 0; alpha < r; ++alpha) {
                        auto [ml, mlm1] = coulomb_shift(p.cd, d.v[alpha], l); // ((v_a)_l, (v_a)_{l-1})
                        shiftE2[alpha] = al[alpha] - scalar_mul_rat(e2l, mlm1);
                        shiftE1[alpha] = al[alpha] - scalar_mul_rat(e1l, ml);
                    }
                    for (const auto& c : tdivs) {
                        if (c.s != s) continue;
                        if (c.i == l)
                            insertion += c.value.scaled(e1l * ch_part(patch, s - 1, e1l, e2l, shiftE2));
                        else
                            insertion += c.value.scaled(ch_part(patch, s, e1l, e2l, shiftE2));
                        if (c.i == l - 1)
                            insertion += c.value.scaled(e2l * ch_part(patch, s - 1, e1l, e2l, shiftE1));
                        else
                            insertion += c.value.scaled(ch_part(patch, s, e1l, e2l, shiftE1));
                    }
                }
            }
        }
        out.add_term(d.qExponent, Rational(0), insertion.exp_nilpotent(one).scaled(weight));
    }
    return out;
}

// Collapse a sector series against fixed rational weights xi^v := prod_i
// sigma_i^{k v_i} (k v_i is integral, so the weight stays rational).
template <class S>
GradedSeries<S> collapse_sectors(const CartanData& cd, const SectorSeries<S>& ss, const std::vector<Rational>& sigma,
                                 const Rational& cutoff) {
    GradedSeries<S> out(cutoff);
    for (const auto& [v, series] : ss) {
        Rational weight(1);
        for (int i = 0; i < v.size(); ++i) {
            long e = rational_to_long(Rational(cd.k) * v(i));
            Rational base = sigma.at(i);
            if (base == 0) throw ConfigError("sector weight base must be nonzero");
            Rational pw(1);
            for (long m = 0; m < std::abs(e); ++m) pw *= base;
            if (e < 0) pw = Rational(1) / pw;
            weight *= pw;
        }
        out += series.truncated(cutoff).scaled_rat(weight);
    }
    return out;
}

} // namespace ale
