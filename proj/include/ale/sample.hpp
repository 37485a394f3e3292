#pragma once

/// @file sample.hpp
/// @brief Deterministic small-height rational sample points, plus the slope
/// validity predicate for the eps1 = x, eps2 = c x substitution.
///
/// Checks draw candidates from a fixed seed and reject against the
/// degeneracy loci of the factor forms actually produced (callers catch
/// VanishingFactor and redraw), recording the accepted samples in reports.

#include <random>
#include <vector>

#include "ale/rational.hpp"

namespace ale {

class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed) : gen_(seed) {}

    // Nonzero rational with |num| <= maxNum, 1 <= den <= maxDen.
    Rational draw(long maxNum = 9, long maxDen = 7) {
        std::uniform_int_distribution<long> num(-maxNum, maxNum), den(1, maxDen);
        for (;;) {
            long n = num(gen_);
            if (n == 0) continue;
            return Rational(n) / Rational(den(gen_));
        }
    }

    // n pairwise distinct nonzero rationals.
    std::vector<Rational> distinct(int n, long maxNum = 9, long maxDen = 7) {
        std::vector<Rational> out;
        while (static_cast<int>(out.size()) < n) {
            Rational c = draw(maxNum, maxDen);
            bool dup = false;
            for (const auto& x : out) dup = dup || x == c;
            if (!dup) out.push_back(c);
        }
        return out;
    }

private:
    std::mt19937_64 gen_;
};

// A slope c is valid when eps1 = x, eps2 = c x degenerates none of the patch
// weights: c not in {0, 1, -1} u {(k-i+1)/(i-1)} u {(k-i)/i}.
inline bool slope_valid(int k, const Rational& c) {
    if (c == 0 || c == 1 || c == -1) return false;
    for (int i = 2; i <= k; ++i)
        if (c == Rational(k - i + 1) / Rational(i - 1)) return false;
    for (int i = 1; i <= k; ++i)
        if (i > 0 && c == Rational(k - i) / Rational(i)) return false;
    return true;
}

} // namespace ale
