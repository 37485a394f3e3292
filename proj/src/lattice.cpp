#include "ale/lattice.hpp"

#include <functional>
#include <sstream>

namespace ale {

CartanData cartan(int k) {
    if (k < 2) throw KTooSmall(k);
    CartanData cd;
    cd.k = k;
    cd.ktilde = (k % 2 == 0) ? k / 2 : k;
    const int n = k - 1;
    cd.C = IntMatrix::Zero(n, n);
    cd.Cinv = RationalMatrix(n, n);
    for (int i = 0; i < n; ++i) {
        cd.C(i, i) = 2;
        if (i + 1 < n) {
            cd.C(i, i + 1) = -1;
            cd.C(i + 1, i) = -1;
        }
        for (int j = 0; j < n; ++j)
            cd.Cinv(i, j) = Rational(std::min(i, j) + 1) - Rational((i + 1) * (j + 1)) / Rational(k);
    }
    return cd;
}

std::pair<ToricWeight, ToricWeight> toric_weights(int k, int i) {
    if (i < 1 || i > k) throw IndexOutOfRange("toric patch index " + std::to_string(i) + " for k = " + std::to_string(k));
    return {ToricWeight{k - i + 1, -(i - 1)}, ToricWeight{-(k - i), i}};
}

Holonomy make_holonomy(int k, const std::vector<int>& w) {
    if (k < 2) throw KTooSmall(k);
    if (static_cast<int>(w.size()) != k) throw ConfigError("holonomy vector must have k entries");
    Holonomy h;
    h.k = k;
    h.w = w;
    for (int i = 0; i < k; ++i) {
        if (w[i] < 0) throw ConfigError("holonomy multiplicities must be nonnegative");
        for (int rep = 0; rep < w[i]; ++rep) h.blockClass.push_back(i);
        h.r += w[i];
        h.totalClass = (h.totalClass + i * w[i]) % k;
    }
    if (h.r < 1) throw ConfigError("rank must be positive");
    return h;
}

Rational quad_form(const CartanData& cd, const SectorVector& v) {
    const int n = cd.k - 1;
    Rational acc(0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (cd.C(i, j) != 0) acc += v(i) * Rational(cd.C(i, j)) * v(j);
    return acc;
}

bool sector_valid(const CartanData& cd, const Holonomy& hol, const SectorVector& v) {
    const int k = cd.k;
    if (v.size() != k - 1) return false;
    for (int l = 1; l <= k - 1; ++l) {
        Rational kv = Rational(k) * v(l - 1);
        if (!is_integer(kv)) return false;
        Int residue = (numerator(kv) + Int(l) * hol.totalClass) % k;
        if (residue < 0) residue += k;
        if (residue != 0) return false;
    }
    return true;
}

namespace {

long spectral_box_radius(int r, const Rational& bound) {
    // v·Cv = u·C^{-1}u and the least eigenvalue of C^{-1} exceeds 1/4, so
    // |u_j|^2 <= 4 u·C^{-1}u <= 8 r bound.
    if (bound < 0) return -1;
    Int cap = iceil(Rational(8) * Rational(r) * bound);
    return static_cast<long>(isqrt(cap)) + 1;
}

// All u in the box with sum_j j u_j = cls (mod k); callback per candidate.
void scan_integer_box(int n, long radius, const std::function<void(const std::vector<long>&)>& fn) {
    std::vector<long> u(n, -radius);
    if (radius < 0) return;
    while (true) {
        fn(u);
        int pos = 0;
        while (pos < n && u[pos] == radius) u[pos++] = -radius;
        if (pos == n) break;
        ++u[pos];
    }
}

bool class_congruent(const std::vector<long>& u, int k, int cls) {
    long s = 0;
    for (size_t j = 0; j < u.size(); ++j) s += static_cast<long>(j + 1) * u[j];
    long residue = (s - cls) % k;
    return residue == 0;
}

SectorVector to_sector(const CartanData& cd, const std::vector<long>& u) {
    // Manual mat-vec: boost's rational scalar trips Eigen's scalar-promotion
    // SFINAE on operator*, so we do not use Eigen products on Rational.
    const int n = cd.k - 1;
    SectorVector v(n);
    for (int i = 0; i < n; ++i) {
        Rational acc(0);
        for (int j = 0; j < n; ++j) acc += cd.Cinv(i, j) * Rational(u[j]);
        v(i) = acc;
    }
    return v;
}

} // namespace

std::vector<SectorVector> enumerate_sectors(const CartanData& cd, const Holonomy& hol, const Rational& bound) {
    const int n = cd.k - 1;
    std::vector<SectorVector> out;
    long radius = spectral_box_radius(hol.r, bound);
    scan_integer_box(n, radius, [&](const std::vector<long>& u) {
        if (!class_congruent(u, cd.k, hol.totalClass)) return;
        SectorVector v = to_sector(cd, u);
        if (quad_form(cd, v) <= Rational(2 * hol.r) * bound) out.push_back(v);
    });
    std::sort(out.begin(), out.end(), [](const SectorVector& a, const SectorVector& b) {
        for (int i = 0; i < a.size(); ++i)
            if (a(i) != b(i)) return a(i) < b(i);
        return false;
    });
    return out;
}

std::vector<SectorSplit> enumerate_sector_splits(const CartanData& cd, const Holonomy& hol, const SectorVector& v,
                                                 const Rational& maxQ, long boxRadius) {
    if (!sector_valid(cd, hol, v)) throw CongruenceViolation("sector " + sector_str(v));
    const int n = cd.k - 1;
    const int r = hol.r;
    std::vector<SectorSplit> out;
    if (maxQ < 0) return out;
    long radius = boxRadius > 0 ? boxRadius : spectral_box_radius(1, maxQ);

    std::vector<long> uTotal(n);
    for (int j = 0; j < n; ++j) {
        Rational uj(0);
        for (int m = 0; m < n; ++m) uj += Rational(cd.C(j, m)) * v(m);
        uTotal[j] = rational_to_long(uj);
    }

    std::vector<std::vector<long>> chosen(r);
    std::vector<SectorVector> vs(r);
    std::function<void(int, Rational, std::vector<long>)> rec = [&](int alpha, Rational budget,
                                                                    std::vector<long> partialSum) {
        if (alpha == r - 1) {
            std::vector<long> uLast(n);
            for (int j = 0; j < n; ++j) uLast[j] = uTotal[j] - partialSum[j];
            if (!class_congruent(uLast, cd.k, hol.blockClass[alpha])) return;
            SectorVector vLast = to_sector(cd, uLast);
            Rational e = quad_form(cd, vLast) / 2;
            if (e > budget) return;
            vs[alpha] = vLast;
            SectorSplit split;
            split.v = vs;
            split.baseExponent = maxQ - budget + e;
            out.push_back(std::move(split));
            return;
        }
        scan_integer_box(n, radius, [&](const std::vector<long>& u) {
            if (!class_congruent(u, cd.k, hol.blockClass[alpha])) return;
            SectorVector va = to_sector(cd, u);
            Rational e = quad_form(cd, va) / 2;
            if (e > budget) return;
            vs[alpha] = va;
            std::vector<long> next = partialSum;
            for (int j = 0; j < n; ++j) next[j] += u[j];
            rec(alpha + 1, budget - e, std::move(next));
        });
    };
    rec(0, maxQ, std::vector<long>(n, 0));
    return out;
}

std::vector<FixedPointDatum> enumerate_sector_data(const CartanData& cd, const Holonomy& hol, const SectorVector& v,
                                                   const Rational& maxQ, long boxRadius) {
    std::vector<FixedPointDatum> out;
    const int r = hol.r;
    for (const auto& split : enumerate_sector_splits(cd, hol, v, maxQ, boxRadius)) {
        long nMax = static_cast<long>(ifloor(maxQ - split.baseExponent));
        for (long n = 0; n <= nMax; ++n) {
            // Compositions of n over the r colours, each colour a k-tuple.
            std::vector<YoungTuple> acc(r);
            std::function<void(int, long)> rec = [&](int alpha, long remaining) {
                if (alpha == r - 1) {
                    for (auto& t : enumerate_young_tuples(cd.k, static_cast<int>(remaining))) {
                        acc[alpha] = std::move(t);
                        FixedPointDatum d;
                        d.tuples = acc;
                        d.v = split.v;
                        d.totalBoxes = static_cast<int>(n);
                        d.qExponent = split.baseExponent + Rational(n);
                        out.push_back(std::move(d));
                    }
                    return;
                }
                for (long m = 0; m <= remaining; ++m)
                    for (auto& t : enumerate_young_tuples(cd.k, static_cast<int>(m))) {
                        acc[alpha] = std::move(t);
                        rec(alpha + 1, remaining - m);
                    }
            };
            rec(0, n);
        }
    }
    return out;
}

Rational discriminant(const CartanData& cd, const FixedPointDatum& d, int r) {
    Rational own(0);
    SectorVector total = SectorVector::Constant(cd.k - 1, Rational(0));
    for (const auto& va : d.v) {
        own += quad_form(cd, va);
        total += va;
    }
    return Rational(d.totalBoxes) + own / 2 - quad_form(cd, total) / Rational(2 * r);
}

Rational dimension_formula(const CartanData& cd, const Holonomy& hol, const Rational& Delta) {
    const int k = cd.k;
    Rational corr(0);
    for (int j = 1; j <= k - 1; ++j) {
        long dot = 0;
        for (int i = 0; i < k; ++i) dot += static_cast<long>(hol.w[i]) * hol.w[(i + j) % k];
        corr += cd.cinv(j, j) * Rational(dot);
    }
    return Rational(2 * hol.r) * Delta - corr / 2;
}

Rational rank_formula(const CartanData& cd, const Holonomy& hol, const SectorVector& v, const Rational& Delta) {
    Rational corr(0);
    for (int j = 1; j <= cd.k - 1; ++j) corr += cd.cinv(j, j) * Rational(hol.w[j]);
    return Delta + quad_form(cd, v) / Rational(2 * hol.r) - corr / 2;
}

FundamentalGate fundamental_gate(const CartanData& cd, const Holonomy& hol, const SectorVector& v, int nFlavours) {
    if (nFlavours < 1 || nFlavours > 2 * hol.r) throw TooManyFlavours(nFlavours, hol.r);
    Rational d(0);
    for (int j = 1; j <= cd.k - 1; ++j) {
        long dot = 0;
        for (int i = 0; i < cd.k; ++i) dot += static_cast<long>(hol.w[i]) * hol.w[(i + j) % cd.k];
        d += cd.cinv(j, j) * (Rational(hol.r) * Rational(hol.w[j]) - Rational(dot) / 2);
    }
    d -= quad_form(cd, v);
    FundamentalStatus st = d < 0 ? FundamentalStatus::excluded
                                 : (d == 0 && nFlavours == 2 * hol.r ? FundamentalStatus::conformal
                                                                     : FundamentalStatus::allowed);
    return FundamentalGate{d, st};
}

std::pair<Rational, Rational> coulomb_shift(const CartanData& cd, const SectorVector& valpha, int i) {
    auto comp = [&](int idx) -> Rational {
        if (idx <= 0 || idx >= cd.k) return Rational(0);
        return valpha(idx - 1);
    };
    return {comp(i), comp(i - 1)};
}

std::string sector_str(const SectorVector& v) {
    std::ostringstream os;
    for (int i = 0; i < v.size(); ++i) os << (i ? "," : "") << to_string(v(i));
    return os.str();
}

} // namespace ale
