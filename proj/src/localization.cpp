#include "ale/localization.hpp"

#include <algorithm>
#include <sstream>

namespace ale {

bool LinearForm::is_zero() const {
    if (e1 != 0 || e2 != 0 || mu != 0 || constant != 0) return false;
    for (const auto& c : a)
        if (c != 0) return false;
    return true;
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
    if (a.size() != o.a.size()) throw Error("linear forms from different Coulomb contexts");
    e1 += o.e1;
    e2 += o.e2;
    mu += o.mu;
    constant += o.constant;
    for (size_t i = 0; i < a.size(); ++i) a[i] += o.a[i];
    return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& o) {
    if (a.size() != o.a.size()) throw Error("linear forms from different Coulomb contexts");
    e1 -= o.e1;
    e2 -= o.e2;
    mu -= o.mu;
    constant -= o.constant;
    for (size_t i = 0; i < a.size(); ++i) a[i] -= o.a[i];
    return *this;
}

LinearForm LinearForm::scaled(const Rational& f) const {
    LinearForm r = *this;
    r.e1 *= f;
    r.e2 *= f;
    r.mu *= f;
    r.constant *= f;
    for (auto& c : r.a) c *= f;
    return r;
}

bool operator==(const LinearForm& a, const LinearForm& b) {
    return a.e1 == b.e1 && a.e2 == b.e2 && a.mu == b.mu && a.constant == b.constant && a.a == b.a;
}

bool operator<(const LinearForm& a, const LinearForm& b) {
    if (a.e1 != b.e1) return a.e1 < b.e1;
    if (a.e2 != b.e2) return a.e2 < b.e2;
    if (a.mu != b.mu) return a.mu < b.mu;
    if (a.constant != b.constant) return a.constant < b.constant;
    return a.a < b.a;
}

std::string LinearForm::str() const {
    std::ostringstream os;
    bool any = false;
    auto emit = [&](const Rational& c, const std::string& name) {
        if (c == 0) return;
        if (any) os << " + ";
        any = true;
        if (c == 1 && !name.empty()) os << name;
        else if (name.empty()) os << to_string(c);
        else os << to_string(c) << "*" << name;
    };
    emit(e1, "e1");
    emit(e2, "e2");
    for (size_t i = 0; i < a.size(); ++i) emit(a[i], "a" + std::to_string(i + 1));
    emit(mu, "mu");
    emit(constant, "");
    if (!any) os << "0";
    return os.str();
}

LinearForm form_eps(const ToricWeight& w, int nA) {
    LinearForm f(nA);
    f.e1 = Rational(w.ce1);
    f.e2 = Rational(w.ce2);
    return f;
}

LinearForm form_coulomb(int alpha, int nA) {
    LinearForm f(nA);
    f.a.at(alpha) = Rational(1);
    return f;
}

LinearForm form_coulomb_diff(int beta, int alpha, int nA) {
    LinearForm f(nA);
    f.a.at(beta) += Rational(1);
    f.a.at(alpha) -= Rational(1);
    return f;
}

LinearForm form_mu(int nA) {
    LinearForm f(nA);
    f.mu = Rational(1);
    return f;
}

long FactoredClass::net_degree() const {
    long d = 0;
    for (const auto& [f, m] : factors_) d += m;
    return d;
}

void FactoredClass::push(const LinearForm& f, int mult) {
    if (mult == 0) return;
    if (f.is_zero()) throw Error("zero linear form pushed into a factored class");
    auto it = std::lower_bound(factors_.begin(), factors_.end(), f,
                               [](const auto& pair, const LinearForm& g) { return pair.first < g; });
    if (it != factors_.end() && it->first == f) {
        it->second += mult;
        if (it->second == 0) factors_.erase(it);
    } else {
        factors_.insert(it, {f, mult});
    }
}

FactoredClass& FactoredClass::operator*=(const FactoredClass& o) {
    for (const auto& [f, m] : o.factors_) push(f, m);
    return *this;
}

FactoredClass FactoredClass::inverse() const {
    FactoredClass r = *this;
    for (auto& [f, m] : r.factors_) m = -m;
    return r;
}

std::string FactoredClass::str() const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [f, m] : factors_) {
        if (!first) os << " * ";
        first = false;
        os << "(" << f.str() << ")";
        if (m != 1) os << "^" << m;
    }
    return os.str();
}

FactoredClass vertex_pair(const Partition& Y, const Partition& Yp, const LinearForm& E1, const LinearForm& E2,
                          const LinearForm& x) {
    FactoredClass out;
    for (int i = 1; i <= Y.num_columns(); ++i)
        for (int j = 1; j <= Y.col(i); ++j) {
            LinearForm f = x - E1.scaled(Rational(leg_in(Yp, i, j))) + E2.scaled(Rational(arm(Y, i, j) + 1));
            out.push(f, 1);
        }
    for (int i = 1; i <= Yp.num_columns(); ++i)
        for (int j = 1; j <= Yp.col(i); ++j) {
            LinearForm f = x + E1.scaled(Rational(leg_in(Y, i, j) + 1)) - E2.scaled(Rational(arm(Yp, i, j)));
            out.push(f, 1);
        }
    return out;
}

FactoredClass vertex_fund(const Partition& Y, const LinearForm& E1, const LinearForm& E2, const LinearForm& x) {
    FactoredClass out;
    for (int i = 1; i <= Y.num_columns(); ++i)
        for (int j = 1; j <= Y.col(i); ++j)
            out.push(x - E1.scaled(Rational(i - 1)) - E2.scaled(Rational(j - 1)), 1);
    return out;
}

std::vector<CharMonomial> restriction_character(long a) {
    std::vector<CharMonomial> out;
    if (a >= 0) {
        for (long j = 0; j <= a; ++j) out.push_back({a / 2, j, 1});
    } else {
        long m = -a;
        for (long j = 1; j <= m - 1; ++j) out.push_back({-(m / 2), -j, -1});
    }
    return out;
}

namespace {

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    Int n = numerator(q), d = denominator(q);
    Int sn = isqrt(n), sd = isqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Rational(sn) / Rational(sd);
}

// Integer roots of i^2 + b*i + c in [0, bound].
std::vector<long> quadratic_integer_roots(const Rational& b, const Rational& c, long bound) {
    std::vector<long> out;
    Rational disc = b * b - Rational(4) * c;
    auto sq = rational_sqrt(disc);
    if (!sq) return out;
    for (int sign : {-1, 1}) {
        Rational root = (-b + Rational(sign) * *sq) / Rational(2);
        if (!is_integer(root)) continue;
        long r = rational_to_long(root);
        if (r >= 0 && r <= bound) out.push_back(r);
        if (*sq == 0) break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

long floor_div2(long x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

} // namespace

EdgeAnalysis analyze_edge(const CartanData& cd, const SectorVector& vDiff) {
    const int k = cd.k;
    const int n = k - 1;
    EdgeAnalysis ea;

    Rational kv = Rational(k) * vDiff(n - 1);
    if (!is_integer(kv)) throw InconsistentContext("k*v_{k-1} not integral for v = " + sector_str(vDiff));
    Int cls = numerator(kv) % k;
    if (cls < 0) cls += k;
    ea.c = to_int(cls);

    ea.s.resize(n);
    for (int l = 1; l <= n; ++l) {
        Rational sl = vDiff(l - 1) - cd.cinv(l, ea.c);
        if (!is_integer(sl))
            throw InconsistentContext("v - C^{-1}e_c not integral for v = " + sector_str(vDiff));
        ea.s[l - 1] = rational_to_long(sl);
    }

    ea.d.assign(n, 0);
    ea.hasRoot.assign(n, 0);
    ea.m = n;
    RationalVector vt(n);
    for (int j = 0; j < n; ++j) vt(j) = vDiff(j);
    const Rational cc = cd.cinv(ea.c, ea.c);
    for (int l = 1; l <= n; ++l) {
        if (l > 1) vt(l - 2) -= Rational(ea.s[l - 2]); // now vt = v - sum_{p<l} s_p e_p
        long sl = ea.s[l - 1];
        if (sl != 0) {
            Rational A(0);
            for (int j = 0; j < n; ++j)
                if (cd.C(l - 1, j) != 0) A += Rational(cd.C(l - 1, j)) * vt(j);
            Rational Q(0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (cd.C(i, j) != 0) Q += vt(i) * Rational(cd.C(i, j)) * vt(j);
            Rational c0 = (Q - cc) / 2;
            Rational b = sl > 0 ? -A : A;
            auto roots = quadratic_integer_roots(b, c0, std::abs(sl));
            if (!roots.empty()) {
                ea.hasRoot[l - 1] = 1;
                ea.d[l - 1] = roots.front();
                ea.m = l;
                break;
            }
            ea.d[l - 1] = std::abs(sl);
        }
    }
    return ea;
}

FactoredClass edge_factor(const CartanData& cd, const SectorVector& vDiff, int n, const LinearForm& base) {
    const int k = cd.k;
    if (n < 1 || n > k - 1) throw IndexOutOfRange("edge divisor index " + std::to_string(n));
    EdgeAnalysis ea = analyze_edge(cd, vDiff);
    FactoredClass out;
    if (n > ea.m) return out;
    long sn = ea.s[n - 1];
    if (sn == 0) return out;
    long d = ea.d[n - 1];
    if (d == 0) return out;

    const int nA = static_cast<int>(base.a.size());
    auto [w1, w2] = toric_weights(k, n);
    LinearForm E1 = form_eps(w1, nA), E2 = form_eps(w2, nA);
    long delta = (n == ea.c) ? 1 : 0;
    long sNext = (n + 1 <= k - 1) ? ea.s[n] : 0;

    auto emit = [&](long aVal, int sign) {
        for (const auto& mono : restriction_character(aVal)) {
            LinearForm f = base + E1.scaled(Rational(mono.p)) + E2.scaled(Rational(mono.q));
            out.push(f, -(sign * mono.coeff));
        }
    };
    if (sn > 0) {
        for (long i = sn - d; i <= sn - 1; ++i) emit(delta - sNext + 2 * i, -1);
    } else {
        for (long i = -sn - d + 1; i <= -sn; ++i) emit(delta - sNext - 2 * i, +1);
    }
    return out;
}

FactoredClass edge_factor_all(const CartanData& cd, const SectorVector& vDiff, const LinearForm& base) {
    FactoredClass out;
    for (int n = 1; n <= cd.k - 1; ++n) out *= edge_factor(cd, vDiff, n, base);
    return out;
}

FactoredClass edge_factor_closed_k2(const Rational& v, const LinearForm& base) {
    const int nA = static_cast<int>(base.a.size());
    LinearForm E1 = form_eps(ToricWeight{2, 0}, nA);   // 2 eps1
    LinearForm E2 = form_eps(ToricWeight{-1, 1}, nA);  // eps2 - eps1
    long fl = static_cast<long>(ifloor(v));
    Rational fr2 = Rational(2) * frac(v);
    if (!is_integer(fr2)) throw InconsistentContext("k=2 sector not in (1/2)Z");
    long f2 = rational_to_long(fr2);
    FactoredClass out;
    if (fl > 0) {
        for (long i = 0; i <= fl - 1; ++i)
            for (long j = 0; j <= 2 * i + f2; ++j)
                out.push(base + E1.scaled(Rational(i)) + E2.scaled(Rational(j)), 1);
    } else if (fl < 0) {
        for (long i = 1; i <= -fl; ++i)
            for (long j = 1; j <= 2 * i - f2 - 1; ++j)
                out.push(base + E1.scaled(Rational(f2 - i)) - E2.scaled(Rational(j)), 1);
    }
    return out;
}

FactoredClass edge_factor_closed_k3(const CartanData& cd, const SectorVector& vDiff, int n, const LinearForm& base) {
    if (cd.k != 3) throw Error("edge_factor_closed_k3 requires k = 3");
    if (n < 1 || n > 2) throw IndexOutOfRange("edge divisor index " + std::to_string(n));
    EdgeAnalysis ea = analyze_edge(cd, vDiff);
    FactoredClass out;
    if (n > ea.m) return out;

    const int nA = static_cast<int>(base.a.size());
    auto [w1, w2] = toric_weights(3, n);
    LinearForm E1 = form_eps(w1, nA), E2 = form_eps(w2, nA);
    long V1 = static_cast<long>(ifloor(vDiff(0)));
    long V2 = static_cast<long>(ifloor(vDiff(1)));

    if (n == 1) {
        long V = V1;
        long B = ((ea.c == 1) ? 1 : 0) - V2;
        long d = ea.d[0];
        if (V > 0) {
            if (B + 2 * (V - d) >= 0) {
                for (long i = V - d; i <= V - 1; ++i)
                    for (long j = 0; j <= 2 * i + B; ++j)
                        out.push(base + E1.scaled(Rational(i + floor_div2(B))) + E2.scaled(Rational(j)), 1);
            } else if (2 <= B + 2 * V) {
                // Mixed case: the printed limits in the source listing are
                // inconsistent with the iterative derivation; these are the
                // ranges the case split actually produces (negative
                // restriction degrees below -floor(B/2), nonnegative above).
                for (long i = V - d; i <= -floor_div2(B) - 1; ++i)
                    for (long j = 1; j <= -2 * i - B - 1; ++j)
                        out.push(base + E1.scaled(Rational(i - floor_div2(-B))) - E2.scaled(Rational(j)), -1);
                for (long i = -floor_div2(B); i <= V - 1; ++i)
                    for (long j = 0; j <= 2 * i + B; ++j)
                        out.push(base + E1.scaled(Rational(i + floor_div2(B))) + E2.scaled(Rational(j)), 1);
            } else {
                for (long i = V - d; i <= V - 1; ++i)
                    for (long j = 1; j <= -2 * i - B - 1; ++j)
                        out.push(base + E1.scaled(Rational(i - floor_div2(-B))) - E2.scaled(Rational(j)), -1);
            }
        } else if (V < 0) {
            long W = -V;
            long d1 = ea.d[0];
            if (B + 2 * V < 2 - 2 * d1) {
                for (long i = 1 + W - d1; i <= W; ++i)
                    for (long j = 1; j <= 2 * i - B - 1; ++j)
                        out.push(base - E1.scaled(Rational(i + floor_div2(-B))) - E2.scaled(Rational(j)), 1);
            } else if (B + 2 * V < 0) {
                for (long i = floor_div2(B) + 1; i <= W; ++i)
                    for (long j = 1; j <= 2 * i - B - 1; ++j)
                        out.push(base - E1.scaled(Rational(i + floor_div2(-B))) - E2.scaled(Rational(j)), 1);
                for (long i = 1 + W - d1; i <= floor_div2(B); ++i)
                    for (long j = 0; j <= -2 * i + B; ++j)
                        out.push(base + E1.scaled(Rational(-i + floor_div2(B))) + E2.scaled(Rational(j)), -1);
            } else {
                for (long i = 1 + W - d1; i <= W; ++i)
                    for (long j = 0; j <= -2 * i + B; ++j)
                        out.push(base + E1.scaled(Rational(-i + floor_div2(B))) + E2.scaled(Rational(j)), -1);
            }
        }
        return out;
    }

    // n = 2
    long V = V2;
    long delta = (ea.c == 2) ? 1 : 0;
    long d = ea.d[1];
    if (V > 0) {
        for (long i = V - d; i <= V - 1; ++i)
            for (long j = 0; j <= 2 * i + delta; ++j)
                out.push(base + E1.scaled(Rational(i)) + E2.scaled(Rational(j)), 1);
    } else if (V < 0) {
        for (long i = 1 - V - d; i <= -V; ++i)
            for (long j = 1; j <= 2 * i - delta - 1; ++j)
                out.push(base - E1.scaled(Rational(floor_div2(-delta) + i)) - E2.scaled(Rational(j)), 1);
    }
    return out;
}

namespace {

FactoredClass euler_pair_block(const CartanData& cd, const FixedPointDatum& d1, const FixedPointDatum& d2, int alpha,
                               int beta, const LinearForm& base, int nA) {
    FactoredClass out;
    SectorVector vDiff = d2.v[beta] - d1.v[alpha];
    for (int i = 1; i <= cd.k; ++i) {
        auto [w1, w2] = toric_weights(cd.k, i);
        LinearForm E1 = form_eps(w1, nA), E2 = form_eps(w2, nA);
        auto [m1, m2] = coulomb_shift(cd, vDiff, i);
        LinearForm x = base - E1.scaled(m1) - E2.scaled(m2);
        out *= vertex_pair(d1.tuples[alpha][i - 1], d2.tuples[beta][i - 1], E1, E2, x);
    }
    out *= edge_factor_all(cd, vDiff, base);
    return out;
}

} // namespace

FactoredClass euler_tangent(const CartanData& cd, const Holonomy& hol, const FixedPointDatum& d,
                            const Rational& muCoeff) {
    const int r = hol.r;
    FactoredClass out;
    for (int alpha = 0; alpha < r; ++alpha)
        for (int beta = 0; beta < r; ++beta) {
            LinearForm base = form_coulomb_diff(beta, alpha, r);
            base.mu = muCoeff;
            out *= euler_pair_block(cd, d, d, alpha, beta, base, r);
        }
    return out;
}

FactoredClass euler_natural(const CartanData& cd, const Holonomy& hol, const FixedPointDatum& d,
                            const Rational& muCoeff) {
    const int r = hol.r;
    FactoredClass out;
    for (int alpha = 0; alpha < r; ++alpha) {
        LinearForm base = form_coulomb(alpha, r);
        base.mu = muCoeff;
        for (int i = 1; i <= cd.k; ++i) {
            auto [w1, w2] = toric_weights(cd.k, i);
            LinearForm E1 = form_eps(w1, r), E2 = form_eps(w2, r);
            auto [m1, m2] = coulomb_shift(cd, d.v[alpha], i);
            LinearForm x = base - E1.scaled(m1) - E2.scaled(m2);
            out *= vertex_fund(d.tuples[alpha][i - 1], E1, E2, x);
        }
        out *= edge_factor_all(cd, d.v[alpha], base);
    }
    return out;
}

FactoredClass euler_bifundamental(const CartanData& cd, const Holonomy& hol1, const FixedPointDatum& d1,
                                  const Holonomy& hol2, const FixedPointDatum& d2, const Rational& muCoeff) {
    const int r = hol1.r, rp = hol2.r;
    const int nA = r + rp;
    FactoredClass out;
    for (int alpha = 0; alpha < r; ++alpha)
        for (int beta = 0; beta < rp; ++beta) {
            LinearForm base(nA);
            base.a[r + beta] += Rational(1);
            base.a[alpha] -= Rational(1);
            base.mu = muCoeff;
            out *= euler_pair_block(cd, d1, d2, alpha, beta, base, nA);
        }
    return out;
}

} // namespace ale
