#include "ale/characters.hpp"

namespace ale {

namespace {

// Coefficients of prod_{n>=1} (1-q^n)^{-m} up to q^N, exact.
std::vector<Rational> inverse_eta_coeffs(int m, long N) {
    std::vector<Rational> c(N + 1, Rational(0));
    c[0] = Rational(1);
    for (long step = 1; step <= N; ++step)
        for (int copy = 0; copy < m; ++copy)
            for (long n = step; n <= N; ++n) c[n] += c[n - step];
    return c;
}

} // namespace

GradedSeries<Rational> eta_inverse_power(int m, const Rational& cutoff) {
    if (m < 1) throw ConfigError("eta_inverse_power needs m >= 1");
    const Rational shift = Rational(m) / Rational(24);
    GradedSeries<Rational> out(cutoff);
    long N = static_cast<long>(ifloor(cutoff + shift));
    if (N < 0) return out;
    auto c = inverse_eta_coeffs(m, N);
    for (long n = 0; n <= N; ++n) out.add_term(Rational(n) - shift, Rational(0), c[n]);
    return out;
}

GradedSeries<Rational> eta_power(int m, const Rational& cutoff) {
    if (m < 0) return eta_inverse_power(-m, cutoff);
    const Rational shift = Rational(m) / Rational(24);
    if (m == 0) return GradedSeries<Rational>::constant(Rational(1), cutoff);
    long N = static_cast<long>(ifloor(cutoff - shift));
    GradedSeries<Rational> out(cutoff);
    if (N < 0) return out;
    // prod (1-q^n) to order N, then m-th power, then the q^{m/24} shift.
    std::vector<Rational> base(N + 1, Rational(0));
    base[0] = Rational(1);
    for (long step = 1; step <= N; ++step) {
        // multiply by (1 - q^step)
        for (long n = N; n >= step; --n) base[n] -= base[n - step];
    }
    std::vector<Rational> acc(N + 1, Rational(0));
    acc[0] = Rational(1);
    for (int copy = 0; copy < m; ++copy) {
        std::vector<Rational> next(N + 1, Rational(0));
        for (long i = 0; i <= N; ++i) {
            if (acc[i] == 0) continue;
            for (long j = 0; i + j <= N; ++j) next[i + j] += acc[i] * base[j];
        }
        acc = std::move(next);
    }
    for (long n = 0; n <= N; ++n) out.add_term(Rational(n) + shift, Rational(0), acc[n]);
    return out;
}

AffineCharacter affine_char(int k, int d, const Rational& cutoff) {
    if (k < 2) throw KTooSmall(k);
    if (d < 0 || d > k - 1) throw IndexOutOfRange("affine weight index " + std::to_string(d));
    auto cd = cartan(k);
    AffineCharacter out;
    out.k = k;
    out.d = d;

    const Rational margin(1);
    const Rational latticeCutoff = cutoff + margin;

    // box radius: (2/k^2) M^2 - M > latticeCutoff excludes the shell
    long M = 1;
    while (Rational(2 * M * M) / Rational(k * k) - Rational(M) <= latticeCutoff) ++M;

    const int n = k - 1;
    const Rational shift = Rational((k - d) * d) / Rational(2 * k);
    std::map<SectorVector, GradedSeries<Rational>, SectorKeyLess> lattice;
    std::vector<long> m(n, -M);
    while (true) {
        SectorVector mv(n);
        for (int i = 0; i < n; ++i) mv(i) = Rational(m[i]);
        Rational e = quad_form(cd, mv) / 2 + shift;
        if (d >= 1) e += Rational(m[d - 1]);
        if (e <= latticeCutoff) {
            SectorVector key = mv;
            if (d >= 1)
                for (int i = 0; i < n; ++i) key(i) += cd.cinv(i + 1, d);
            auto it = lattice.find(key);
            if (it == lattice.end())
                it = lattice.emplace(key, GradedSeries<Rational>(latticeCutoff)).first;
            it->second.add_term(e, Rational(0), Rational(1));
        }
        int pos = 0;
        while (pos < n && m[pos] == M) m[pos++] = -M;
        if (pos == n) break;
        ++m[pos];
    }

    auto dressing = eta_inverse_power(k - 1, latticeCutoff);
    for (auto& [key, series] : lattice) {
        auto dressed = (series * dressing).truncated(cutoff);
        if (!dressed.is_zero()) out.sectors.emplace(key, std::move(dressed));
    }
    return out;
}

CheckReport vw_character_check(int k, int r, const std::vector<int>& w, const Rational& cutoff) {
    CheckReport rep;
    rep.name = "vw-character";
    auto cd = cartan(k);
    auto hol = make_holonomy(k, w);
    if (hol.r != r) throw ConfigError("rank does not match the holonomy vector");

    auto lhs = z_vw(cd, hol, cutoff);

    // RHS: q^{rk/24} prod_alpha (chi^{omega_{c_alpha}} / eta), sector-convolved.
    const Rational wide = cutoff + Rational(r * k) / Rational(24) + Rational(1);
    auto etaInv = eta_inverse_power(1, wide);
    SectorSeries<Rational> acc;
    bool first = true;
    for (int alpha = 0; alpha < r; ++alpha) {
        auto chi = affine_char(k, hol.blockClass[alpha], wide);
        SectorSeries<Rational> factor;
        for (const auto& [v, s] : chi.sectors) factor.emplace(v, s * etaInv);
        if (first) {
            acc = std::move(factor);
            first = false;
            continue;
        }
        SectorSeries<Rational> next;
        for (const auto& [va, sa] : acc)
            for (const auto& [vb, sb] : factor) {
                SectorVector key = va + vb;
                auto prod = sa * sb;
                auto it = next.find(key);
                if (it == next.end()) next.emplace(key, std::move(prod));
                else it->second += prod;
            }
        acc = std::move(next);
    }

    const Rational pre = Rational(r * k) / Rational(24);
    SectorSeries<Rational> rhs;
    for (const auto& [v, s] : acc) {
        auto shifted = s.shifted(pre).truncated(cutoff);
        if (!shifted.is_zero()) rhs.emplace(v, std::move(shifted));
    }

    for (const auto& [v, s] : lhs) {
        auto it = rhs.find(v);
        if (it == rhs.end()) {
            rep.fail_row("sector " + sector_str(v), s.str(), "absent", "character product has no such sector");
            continue;
        }
        if (!(it->second == s)) {
            for (const auto& [e, c] : s.terms()) {
                Rational got = it->second.coefficient(e.q);
                if (got != c)
                    rep.fail_row("sector " + sector_str(v) + ", q^" + to_string(e.q), to_string(c), to_string(got),
                                 "fixed-point count vs character coefficient");
            }
            for (const auto& [e, c] : it->second.terms())
                if (s.find_term(e.q) == nullptr)
                    rep.fail_row("sector " + sector_str(v) + ", q^" + to_string(e.q), "0", to_string(c),
                                 "character has an extra term");
        }
    }
    for (const auto& [v, s] : rhs)
        if (lhs.find(v) == lhs.end())
            rep.fail_row("sector " + sector_str(v), "absent", s.str(), "extra sector in the character product");
    return rep;
}

} // namespace ale
