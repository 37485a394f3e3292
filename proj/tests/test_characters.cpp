#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ale/characters.hpp"

using namespace ale;

namespace {
Rational rq(long n, long d = 1) { return Rational(n) / Rational(d); }
} // namespace

TEST_CASE("eta inverse coefficients are partition counts") {
    auto e = eta_inverse_power(1, rq(8));
    const Rational s = rq(1, 24);
    for (long n = 0; n <= 7; ++n)
        CHECK(e.coefficient(Rational(n) - s) == Rational(static_cast<long>(enumerate_partitions(n).size())));

    auto e2 = eta_inverse_power(2, rq(4));
    CHECK(e2.coefficient(rq(2) - rq(2, 24)) == rq(5));

    // eta * eta^{-1} = 1 to the cutoff
    auto prod = eta_power(3, rq(4)) * eta_inverse_power(3, rq(4));
    CHECK(prod == GradedSeries<Rational>::constant(rq(1), rq(4)));
}

TEST_CASE("affine characters") {
    SUBCASE("k=2, d=0: leading exponent is the eta dressing only") {
        auto chi = affine_char(2, 0, rq(2));
        SectorVector zero(1);
        zero(0) = rq(0);
        auto it = chi.sectors.find(zero);
        REQUIRE(it != chi.sectors.end());
        CHECK(it->second.coefficient(rq(0) - rq(1, 24)) == rq(1));
    }
    SUBCASE("k=2, d=1 carries the 1/4 shift") {
        auto chi = affine_char(2, 1, rq(2));
        SectorVector half(1);
        half(0) = rq(1, 2);
        auto it = chi.sectors.find(half);
        REQUIRE(it != chi.sectors.end());
        CHECK(it->second.coefficient(rq(1, 4) - rq(1, 24)) == rq(1));
    }
    SUBCASE("k=3, d=1 sector keys shift by C^{-1} e_1 = (2/3, 1/3)") {
        auto chi = affine_char(3, 1, rq(1));
        for (const auto& [v, s] : chi.sectors) {
            CHECK(is_integer(v(0) - rq(2, 3)));
            CHECK(is_integer(v(1) - rq(1, 3)));
        }
    }
    SUBCASE("coefficients are nonnegative integers") {
        for (int k = 2; k <= 3; ++k)
            for (int d = 0; d < k; ++d)
                for (const auto& [v, s] : affine_char(k, d, rq(2)).sectors)
                    for (const auto& [e, c] : s.terms()) {
                        CHECK(is_integer(c));
                        CHECK(c > 0);
                    }
    }
}

TEST_CASE("Vafa-Witten character identity, small cases") {
    CHECK(vw_character_check(2, 1, {1, 0}, rq(3)).status == CheckStatus::pass);
    CHECK(vw_character_check(2, 1, {0, 1}, rq(3)).status == CheckStatus::pass);
    CHECK(vw_character_check(2, 2, {1, 1}, rq(2)).status == CheckStatus::pass);
    CHECK(vw_character_check(3, 1, {0, 1, 0}, rq(2)).status == CheckStatus::pass);
}
