#pragma once

/// @file characters.hpp
/// @brief Dedekind eta series and level-one affine sl(k) characters, sector
/// resolved, for the Vafa-Witten identity.
///
/// Everything stays exact: eta powers carry their q^{m/24} prefactor as a
/// rational exponent shift, and the xi-monomials of a character are indexed
/// by the lattice vector m + C^{-1}e_d directly (no complex exponentials).

#include "ale/ale_theory.hpp"
#include "ale/report.hpp"

namespace ale {

// eta(q)^{-m} = q^{-m/24} prod_n (1-q^n)^{-m}; integer coefficients, and for
// m = 1 the coefficients are the partition counts.
GradedSeries<Rational> eta_inverse_power(int m, const Rational& cutoff);

// eta(q)^{+m}.
GradedSeries<Rational> eta_power(int m, const Rational& cutoff);

// Level-one character of weight d, resolved by sector: the lattice vector m
// contributes q^{(1/2) m.Cm + m_d + (k-d)d/2k} in sector m + C^{-1}e_d, all
// dressed by eta^{-k+1}.
struct AffineCharacter {
    int k = 0;
    int d = 0;
    SectorSeries<Rational> sectors;
};

AffineCharacter affine_char(int k, int d, const Rational& cutoff);

// Sector-wise exact comparison of z_vw against
// q^{rk/24} prod_j (chi^{omega_j} / eta)^{w_j}; mismatches become fail rows.
CheckReport vw_character_check(int k, int r, const std::vector<int>& w, const Rational& cutoff);

} // namespace ale
