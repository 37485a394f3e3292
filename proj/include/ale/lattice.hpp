#pragma once

/// @file lattice.hpp
/// @brief Cartan data of A_{k-1}, toric patch weights, holonomy congruences,
/// sector and fixed-point enumeration, and the closed dimension/rank
/// formulas.
///
/// Conventions fixed here and reused by every consumer:
///  - blocks are ordered (0,...,0,1,...,1,...) with class i repeated w_i
///    times, and the Coulomb parameters are permuted alongside;
///  - (v)_0 = (v)_k = 0;
///  - the class c of a sector difference is k*(v)_{k-1} mod k.

#include <vector>

#include "ale/rational.hpp"
#include "ale/young.hpp"

namespace ale {

struct CartanData {
    int k = 0;
    IntMatrix C;          // (k-1) x (k-1), tridiagonal 2 / -1
    RationalMatrix Cinv;  // (C^{-1})^{ij} = min(i,j) - i*j/k
    int ktilde = 0;       // k/2 for even k, k for odd k

    // (C^{-1})^{ij} with the boundary convention: index 0 or k means 0.
    Rational cinv(int i, int j) const {
        if (i <= 0 || j <= 0 || i >= k || j >= k) return Rational(0);
        return Cinv(i - 1, j - 1);
    }
};

CartanData cartan(int k); // KTooSmall for k < 2

// Patch weights eps_1^{(i)}, eps_2^{(i)} as integer forms in (eps1, eps2):
// eps1^{(i)} = (k-i+1) eps1 - (i-1) eps2, eps2^{(i)} = -(k-i) eps1 + i eps2.
struct ToricWeight {
    long ce1 = 0, ce2 = 0;
};
std::pair<ToricWeight, ToricWeight> toric_weights(int k, int i); // IndexOutOfRange unless 1 <= i <= k

// Sector vectors live in (1/k) Z^{k-1}.
using SectorVector = RationalVector;

struct Holonomy {
    int k = 0;
    std::vector<int> w;          // w_0 .. w_{k-1}
    int r = 0;                   // sum w_i
    std::vector<int> blockClass; // c_alpha for alpha = 0..r-1 (0-based storage)
    int totalClass = 0;          // sum_i i*w_i mod k
};
Holonomy make_holonomy(int k, const std::vector<int>& w);

// v*C*v as an exact rational.
Rational quad_form(const CartanData& cd, const SectorVector& v);

// k*v integral, k*v_{k-1} congruent to the holonomy class, and componentwise
// k*v_l = -l*c mod k.
bool sector_valid(const CartanData& cd, const Holonomy& hol, const SectorVector& v);

// All sectors with (1/2r) v·Cv <= bound (the sector's minimal possible
// q-exponent, which makes this cut exhaustive for series to order `bound`).
std::vector<SectorVector> enumerate_sectors(const CartanData& cd, const Holonomy& hol, const Rational& bound);

// Integer first-Chern data u_alpha for each colour, plus its sector vector.
struct SectorSplit {
    std::vector<SectorVector> v;  // v_alpha = C^{-1} u_alpha
    Rational baseExponent;        // (1/2) sum_alpha v_alpha · C v_alpha
};

// All splits (v_1..v_r) with sum = v, per-block congruence
// sum_j j (u_alpha)_j = c_alpha mod k, and baseExponent <= maxQ.
// `boxRadius` widens the integer search box beyond the spectral bound
// (brute-force exhaustiveness tests); 0 means the derived bound.
std::vector<SectorSplit> enumerate_sector_splits(const CartanData& cd, const Holonomy& hol, const SectorVector& v,
                                                 const Rational& maxQ, long boxRadius = 0);

// Full combinatorial datum of a torus-fixed point.
struct FixedPointDatum {
    std::vector<YoungTuple> tuples; // r tuples of k tableaux
    std::vector<SectorVector> v;    // r sector vectors
    int totalBoxes = 0;             // sum n_alpha
    Rational qExponent;             // totalBoxes + (1/2) sum v_alpha·Cv_alpha
};

// Every datum in the sector with qExponent <= maxQ, each exactly once,
// deterministic order. Throws CongruenceViolation for an invalid sector.
std::vector<FixedPointDatum> enumerate_sector_data(const CartanData& cd, const Holonomy& hol, const SectorVector& v,
                                                   const Rational& maxQ, long boxRadius = 0);

// Delta = sum n_alpha + (1/2) sum_a v_a·Cv_a - (1/2r) (sum v)·C(sum v).
Rational discriminant(const CartanData& cd, const FixedPointDatum& d, int r);

// dim M = 2r*Delta - (1/2) sum_j (C^{-1})^{jj} w·w(j), w(j) the cyclic shift.
Rational dimension_formula(const CartanData& cd, const Holonomy& hol, const Rational& Delta);

// rk V = Delta + (1/2r) v·Cv - (1/2) sum_j (C^{-1})^{jj} w_j.
Rational rank_formula(const CartanData& cd, const Holonomy& hol, const SectorVector& v, const Rational& Delta);

// Fundamental-matter constraint d_w(v) >= 0.
enum class FundamentalStatus { allowed, conformal, excluded };
struct FundamentalGate {
    Rational d;
    FundamentalStatus status;
};
FundamentalGate fundamental_gate(const CartanData& cd, const Holonomy& hol, const SectorVector& v, int nFlavours);

// a^{(i)} componentwise shift: a_alpha - (v_alpha)_i eps1^{(i)} - (v_alpha)_{i-1} eps2^{(i)}.
// Returned as the pair of rational multiples (m1, m2) of (eps1^{(i)}, eps2^{(i)}).
std::pair<Rational, Rational> coulomb_shift(const CartanData& cd, const SectorVector& valpha, int i);

std::string sector_str(const SectorVector& v);

} // namespace ale
