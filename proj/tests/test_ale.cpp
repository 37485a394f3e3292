#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ale/ale_theory.hpp"

using namespace ale;

namespace {

Rational rq(long n, long d = 1) { return Rational(n) / Rational(d); }

SectorVector sv(std::initializer_list<Rational> vals) {
    SectorVector v(static_cast<int>(vals.size()));
    int i = 0;
    for (const auto& x : vals) v(i++) = x;
    return v;
}

AleParams<Rational> params(int k, std::vector<int> w, Rational e1, Rational e2, std::vector<Rational> a,
                           Rational cutoff) {
    AleParams<Rational> p;
    p.cd = cartan(k);
    p.hol = make_holonomy(k, w);
    p.e1 = std::move(e1);
    p.e2 = std::move(e2);
    p.a = std::move(a);
    p.cutoff = std::move(cutoff);
    return p;
}

} // namespace

TEST_CASE("leading term of the trivial sector is 1") {
    auto p = params(2, {2, 0}, rq(1, 5), rq(1, 7), {rq(7, 3), rq(-7, 3)}, rq(1));
    auto z = z_ale_sector(p, sv({rq(0)}));
    CHECK(z.coefficient(rq(0)) == rq(1));
}

TEST_CASE("App D k=3 U(2) leading coefficients") {
    auto mk = [&](std::vector<int> w) {
        return params(3, std::move(w), rq(1, 5), rq(1, 7), {rq(7, 3), rq(-7, 3)}, rq(1));
    };
    Rational e1 = rq(1, 5), e2 = rq(1, 7);
    Rational twoa = rq(7, 3) - rq(-7, 3);

    SUBCASE("(2,0,0), v=(1,1): the two-term q coefficient") {
        auto z = z_ale_sector(mk({2, 0, 0}), sv({rq(1), rq(1)}));
        Rational expect = -Rational(1) / (twoa * (twoa - e1 - e2)) - Rational(1) / (twoa * (twoa + e1 + e2));
        CHECK(z.coefficient(rq(1)) == expect);
    }
    SUBCASE("(1,1,0), v=(2/3,1/3): leading term q^{1/3}") {
        auto z = z_ale_sector(mk({1, 1, 0}), sv({rq(2, 3), rq(1, 3)}));
        CHECK(z.coefficient(rq(1, 3)) == rq(1));
    }
    SUBCASE("(0,1,1), v=(1,1): leading term q^{2/3}") {
        auto z = z_ale_sector(mk({0, 1, 1}), sv({rq(1), rq(1)}));
        CHECK(z.coefficient(rq(2, 3)) == rq(1));
    }
    SUBCASE("(0,1,1), v=(0,0): the paper-flagged three-term q^{2/3} coefficient") {
        auto z = z_ale_sector(mk({0, 1, 1}), sv({rq(0), rq(0)}));
        Rational expect = -Rational(1) / (twoa * (twoa + e1 + e2)) -
                          Rational(1) / ((twoa - Rational(3) * e2) * (twoa - e1 - e2)) -
                          Rational(1) / ((twoa - e1 - e2) * (twoa + e1 + e2));
        CHECK(z.coefficient(rq(2, 3)) == expect);
    }
}

TEST_CASE("k=2 r=1 factorization into two C^2 blocks") {
    Rational e1 = rq(2, 7), e2 = rq(-3, 5);
    auto p = params(2, {1, 0}, e1, e2, {rq(4, 9)}, rq(3));
    SectorVector v = sv({rq(1)});
    auto z = z_ale_sector(p, v);

    // r = 1: the sector has the single split v_1 = v, all edge factors are
    // trivial, and the series is q^{v^2} Z(2e1, e2-e1, a - 2e1 v) Z(e1-e2, 2e2, a - 2e2 v).
    const long v1 = 1;
    Rational e0 = Rational(v1 * v1);
    C2Params<Rational> b1, b2;
    b1.e1 = Rational(2) * e1;
    b1.e2 = e2 - e1;
    b1.a = {p.a[0] - Rational(2 * v1) * e1};
    b1.cutoff = p.cutoff - e0;
    b2.e1 = e1 - e2;
    b2.e2 = Rational(2) * e2;
    b2.a = {p.a[0] - Rational(2 * v1) * e2};
    b2.cutoff = p.cutoff - e0;
    GradedSeries<Rational> expect = (z_c2(b1) * z_c2(b2)).shifted(e0);
    CHECK(z == expect);
}

TEST_CASE("factorized route equals direct localization") {
    SUBCASE("pure, k=2, r=2, half-integer sector") {
        auto p = params(2, {1, 1}, rq(1, 5), rq(1, 7), {rq(7, 3), rq(-7, 3)}, rq(3, 2));
        SectorVector v = sv({rq(1, 2)});
        CHECK(z_ale_sector(p, v) == z_ale_sector_direct(p, v));
    }
    SUBCASE("adjoint, k=3, r=2") {
        auto p = params(3, {1, 1, 0}, rq(1, 5), rq(1, 7), {rq(7, 3), rq(-7, 3)}, rq(4, 3));
        p.matter = Matter::adjoint;
        p.mu = rq(3, 11);
        SectorVector v = sv({rq(2, 3), rq(1, 3)});
        CHECK(z_ale_sector(p, v) == z_ale_sector_direct(p, v));
    }
    SUBCASE("fundamental, k=2, r=2, conformal sector") {
        auto p = params(2, {1, 1}, rq(1, 5), rq(1, 7), {rq(7, 3), rq(-7, 3)}, rq(1));
        p.matter = Matter::fundamental;
        p.mus = {rq(1, 2), rq(-2, 5)};
        SectorVector v = sv({rq(1, 2)});
        CHECK(z_ale_sector(p, v) == z_ale_sector_direct(p, v));
    }
}

TEST_CASE("sector keys and fundamental gating") {
    auto p = params(2, {1, 1}, rq(1, 5), rq(1, 7), {rq(7, 3), rq(-7, 3)}, rq(2));
    auto res = z_ale(p);
    for (const auto& [v, s] : res.sectors) {
        Rational twice = Rational(2) * v(0);
        CHECK(is_integer(twice));
        CHECK(numerator(twice) % 2 != 0); // in Z + 1/2
    }
    CHECK(res.firstDroppedExponent.has_value());

    // fundamental with w = (r, 0): the only allowed sector is v = 0
    auto pf = params(2, {2, 0}, rq(1, 5), rq(1, 7), {rq(7, 3), rq(-7, 3)}, rq(2));
    pf.matter = Matter::fundamental;
    pf.mus = {rq(1, 3), rq(2, 5), rq(-3, 7)};
    auto resf = z_ale(pf);
    REQUIRE(resf.sectors.size() == 1);
    CHECK(resf.sectors.begin()->first == sv({rq(0)}));
    CHECK_THROWS_AS(z_ale_sector(pf, sv({rq(1)})), SectorExcluded);
}

TEST_CASE("block-permutation symmetry of the Coulomb parameters") {
    auto p = params(2, {2, 0}, rq(1, 5), rq(1, 7), {rq(7, 3), rq(-1, 4)}, rq(2));
    auto q = p;
    std::swap(q.a[0], q.a[1]);
    for (const auto& v : {sv({rq(0)}), sv({rq(1)})}) {
        CHECK(z_ale_sector(p, v) == z_ale_sector(q, v));
    }
}

TEST_CASE("Vafa-Witten: integrality, positivity, eta factorization, adjoint limit") {
    auto cd = cartan(2);
    auto hol = make_holonomy(2, {1, 0});
    auto vw = z_vw(cd, hol, rq(3));
    auto counts = tuple_counts(2, 3);
    for (const auto& [v, s] : vw) {
        for (const auto& [e, c] : s.terms()) {
            CHECK(is_integer(c));
            CHECK(c > 0);
        }
        // r=1: series = q^{v^2} sum_n p_2(n) q^n
        Rational v2 = v(0) * v(0);
        for (long n = 0; v2 + Rational(n) <= rq(3); ++n) CHECK(s.coefficient(v2 + Rational(n)) == Rational(counts[n]));
    }

    // mu -> 0 adjoint limit equals z_vw sector-wise (order <= 2)
    auto p = params(2, {1, 1}, rq(1, 5), rq(1, 7), {rq(7, 3), rq(-7, 3)}, rq(2));
    p.matter = Matter::adjoint;
    p.mu = rq(0);
    auto hol11 = make_holonomy(2, {1, 1});
    auto vw11 = z_vw(cartan(2), hol11, rq(2));
    auto za = z_ale(p);
    CHECK(za.sectors.size() == vw11.size());
    for (const auto& [v, s] : vw11) {
        auto it = za.sectors.find(v);
        REQUIRE(it != za.sectors.end());
        CHECK(it->second == s);
    }
}

TEST_CASE("z_circ grading") {
    SUBCASE("u -> 1 collapse reproduces z_ale") {
        auto p = params(2, {1, 1}, rq(1, 5), rq(1, 7), {rq(7, 3), rq(-7, 3)}, rq(3, 2));
        auto zc = z_circ(p);
        auto za = z_ale(p);
        CHECK(zc.size() == za.sectors.size());
        for (const auto& [v, s] : zc) {
            auto it = za.sectors.find(v);
            REQUIRE(it != za.sectors.end());
            CHECK(s.u_collapsed() == it->second);
        }
    }
    SUBCASE("r = 1: every u-exponent vanishes") {
        auto p = params(2, {1, 0}, rq(1, 5), rq(1, 7), {rq(4, 9)}, rq(2));
        for (const auto& [v, s] : z_circ(p))
            for (const auto& [e, c] : s.terms()) CHECK(e.u == 0);
    }
    SUBCASE("k=2, r=2: the ((1/2),(-1/2)) split carries u^{-1/2}") {
        // both colours in the class-1 block, so v_alpha in Z + 1/2
        auto p = params(2, {0, 2}, rq(1, 5), rq(1, 7), {rq(7, 3), rq(-7, 3)}, rq(1, 2));
        auto zc = z_circ(p);
        auto it = zc.find(sv({rq(0)}));
        REQUIRE(it != zc.end());
        const Rational half = rq(1, 2);
        CHECK(it->second.find_term(half, rq(-1, 2)) != nullptr);
    }
}

TEST_CASE("z_bullet_k2 against the direct deformed route") {
    auto spec = make_jet_spec({"t"}, 2);
    auto p = params(2, {1, 1}, rq(1, 5), rq(1, 7), {rq(7, 3), rq(-7, 3)}, rq(5, 4));
    auto zb = z_bullet_k2(p, spec, "t");

    SUBCASE("t = 0 collapse is z_ale") {
        auto za = z_ale(p);
        for (const auto& [v, s] : zb) {
            auto it = za.sectors.find(v);
            REQUIRE(it != za.sectors.end());
            CHECK(jet_component(s, {0}) == it->second);
        }
    }
    SUBCASE("degree-1 t coefficient at q^0 in the zero-split sector vanishes") {
        auto p20 = params(2, {2, 0}, rq(1, 5), rq(1, 7), {rq(7, 3), rq(-7, 3)}, rq(1, 2));
        auto zb20 = z_bullet_k2(p20, spec, "t");
        auto it = zb20.find(sv({rq(0)}));
        REQUIRE(it != zb20.end());
        CHECK(jet_component(it->second, {1}).coefficient(rq(0)) == rq(0));
    }
    SUBCASE("matches z_deformed_sector with t^{(1)} = (0, -t)") {
        Jet<Rational> mt = -Jet<Rational>::symbol(spec, "t", rq(1));
        for (const auto& [v, s] : zb) {
            auto direct = z_deformed_sector(p, v, spec, {}, {{1, 1, mt}});
            CHECK(s == direct);
        }
    }
    CHECK_THROWS_AS(z_bullet_k2(params(3, {1, 0, 0}, rq(1, 5), rq(1, 7), {rq(1, 3)}, rq(1)), spec, "t"), KNotTwo);
}

TEST_CASE("z_deformed_sector specializations") {
    auto spec = make_jet_spec({"tau1"}, 2);
    auto p = params(2, {1, 1}, rq(1, 5), rq(1, 7), {rq(7, 3), rq(-7, 3)}, rq(5, 4));

    SUBCASE("all jets zero reduces to z_ale_sector") {
        for (const auto& v : enumerate_sectors(p.cd, p.hol, p.cutoff)) {
            auto dz = z_deformed_sector(p, v, spec, {}, {});
            CHECK(jet_component(dz, {0}) == z_ale_sector(p, v));
            CHECK(jet_component(dz, {1}).is_zero());
        }
    }
    SUBCASE("tau = (0,-tau1): matches z_circ expanded in u = e^{tau1}") {
        Jet<Rational> mtau = -Jet<Rational>::symbol(spec, "tau1", rq(1));
        // the direct route carries the classical factor Z_cl^{1/k} =
        // exp(-tau1 sum a^2 / (2 k e1 e2)) that eq. "deformedinstanton" strips
        Rational clExp = -(p.a[0] * p.a[0] + p.a[1] * p.a[1]) / (Rational(2 * 2) * p.e1 * p.e2);
        Jet<Rational> cl = Jet<Rational>::symbol(spec, "tau1", clExp).exp_nilpotent(rq(1));
        auto zc = z_circ(p);
        for (const auto& [v, s] : zc) {
            auto dz = z_deformed_sector(p, v, spec, {{1, mtau}}, {});
            // The direct route carries e^{tau1 E_q} per term (the deformation
            // is exactly the coupling shift q -> q e^{tau1}); z_circ's formal
            // u-grading is dropped in the comparison.
            DeformationJet<Rational> expect(p.cutoff);
            for (const auto& [e, c] : s.terms()) {
                Jet<Rational> tau = Jet<Rational>::symbol(spec, "tau1", e.q);
                expect.add_term(e.q, rq(0), (tau.exp_nilpotent(rq(1)) * cl).scaled(c));
            }
            CHECK(dz == expect);
        }
    }
    SUBCASE("k=2 t-only couplings factorize into two deformed C^2 blocks (order q, degree 1)") {
        auto spec2 = make_jet_spec({"t0"}, 1);
        Jet<Rational> tj = Jet<Rational>::symbol(spec2, "t0", rq(1));
        SectorVector v = sv({rq(1, 2)});
        auto dz = z_deformed_sector(p, v, spec2, {}, {{1, 0, tj}});
        // route B: per split, Z(2e1, e2-e1, ...; tau + 2 e1 t) Z(e1-e2, 2e2, ...; tau + 2 e2 t)
        DeformationJet<Rational> expect(p.cutoff);
        for (const auto& split : enumerate_sector_splits(p.cd, p.hol, v, p.cutoff)) {
            Rational bc = p.cutoff - split.baseExponent;
            Rational edge = detail::split_edge_factor(p, split);
            DeformationJet<Rational> blocks = DeformationJet<Rational>::constant(Jet<Rational>(spec2, rq(1)), bc);
            for (int i = 1; i <= 2; ++i) {
                auto cp = detail::patch_c2_params(p, split, i, bc);
                Rational epsi = (i == 1) ? Rational(2) * p.e1 : Rational(2) * p.e2;
                std::vector<TauCoupling<Rational>> taus{{0, tj.scaled(epsi)}};
                blocks *= z_c2_deformed(cp, spec2, taus);
            }
            expect += blocks.shifted(split.baseExponent).scaled(Jet<Rational>(spec2, edge));
        }
        CHECK(dz == expect);
    }
}
